#include "Box.hh"
#include "Sphere.hh"
#include "Tube.hh"
#include "SolidRegistry.hh"
#include "Visitor.hh"

int main()
{
  Box box(1.0, 2.0, 3.0);
  Sphere sphere(4.0);
  Tube tube(0.5, 1.5, 2.0);
  box.SetName("box");
  sphere.SetName("sphere");
  tube.SetName("tube");

  VolumeVisitor visitor;
  SolidRegistry& registry = SolidRegistry::Instance();
  for (int i = 0; i < registry.Count(); ++i) {
    visitor.Visit(registry.At(i));
  }

  return visitor.Total() > 0.0 ? 0 : 1;
}
