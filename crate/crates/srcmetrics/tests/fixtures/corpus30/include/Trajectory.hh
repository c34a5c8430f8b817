#ifndef TRAJECTORY_HH
#define TRAJECTORY_HH

/* A straight step through space, plus bookkeeping that has nothing to
   do with the geometric part (deliberately low cohesion). */
class Trajectory
{
  public:
    Trajectory();

    void SetStep(double dx, double dy, double dz);
    double Length() const;

    void SetLabel(const char* label);
    const char* Label() const;

    void Touch();
    int Touches() const;

  private:
    double fDx;
    double fDy;
    double fDz;
    const char* fLabel;
    int fTouches;
};

#endif
