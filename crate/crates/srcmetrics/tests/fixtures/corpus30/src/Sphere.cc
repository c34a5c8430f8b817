#include "Sphere.hh"
#include "Units.hh"

Sphere::Sphere(double radius) : fRadius(radius)
{
}

Sphere::~Sphere()
{
}

double Sphere::Volume() const
{
  return 4.0 / 3.0 * UNIT_PI * fRadius * fRadius * fRadius;
}

double Sphere::SurfaceArea() const
{
  return 4.0 * UNIT_PI * fRadius * fRadius;
}

bool Sphere::Inside(double x, double y, double z) const
{
  return x * x + y * y + z * z <= fRadius * fRadius;
}
