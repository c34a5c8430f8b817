#include "Box.hh"
#include "MathUtils.hh"

Box::Box(double dx, double dy, double dz) : fDx(dx), fDy(dy), fDz(dz)
{
}

Box::~Box()
{
}

double Box::Volume() const
{
  return 8.0 * fDx * fDy * fDz;
}

double Box::SurfaceArea() const
{
  return 8.0 * (fDx * fDy + fDy * fDz + fDz * fDx);
}

bool Box::Inside(double x, double y, double z) const
{
  if (x < -fDx || x > fDx) {
    return false;
  }
  if (y < -fDy || y > fDy) {
    return false;
  }
  return z >= -fDz && z <= fDz;
}
