#include "Material.hh"

Material::Material(const char* name, double density)
  : fName(name), fDensity(density)
{
}

double Material::Density() const
{
  return fDensity;
}

const char* Material::Name() const
{
  return fName;
}

double Material::MassOfVolume(double volume) const
{
  double cm3 = volume / 1000.0;  // mm3 to cm3
  return fDensity * cm3;
}
