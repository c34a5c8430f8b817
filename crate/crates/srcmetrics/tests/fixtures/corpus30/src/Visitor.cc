#include "Visitor.hh"
#include "VSolid.hh"

Visitor::~Visitor()
{
}

VolumeVisitor::VolumeVisitor() : fTotal(0.0)
{
}

void VolumeVisitor::Visit(VSolid* solid)
{
  if (solid) {
    fTotal += solid->Volume();
  }
}

double VolumeVisitor::Total() const
{
  return fTotal;
}

CountingVisitor::CountingVisitor() : fVisits(0)
{
}

void CountingVisitor::Visit(VSolid* solid)
{
  VolumeVisitor::Visit(solid);
  ++fVisits;
}
