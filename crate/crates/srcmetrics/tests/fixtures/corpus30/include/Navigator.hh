#ifndef NAVIGATOR_HH
#define NAVIGATOR_HH

class VSolid;

// Steps a point through the registered solids.
class Navigator
{
  public:
    Navigator();

    int LocateSolid(double x, double y, double z) const;  // index or -1
    double StepToBoundary(double x, double y, double z,
                          double dx, double dy, double dz) const;

  private:
    double fTolerance;
};

#endif
