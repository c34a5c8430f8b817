#ifndef ENGINE_HH
#define ENGINE_HH

class Engine
{
  public:
    double Advance(double dt);
    double Time() const;

  private:
    double fTime;
};

#endif
