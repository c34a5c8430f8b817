#include "VSolid.hh"
#include "SolidRegistry.hh"

VSolid::VSolid() : fName("unnamed"), fId(0)
{
  SolidRegistry::Instance().Register(this);
}

VSolid::~VSolid()
{
  SolidRegistry::Instance().Deregister(this);
}

const char* VSolid::GetName() const
{
  return fName;
}

void VSolid::SetName(const char* name)
{
  if (name) {
    fName = name;
  }
}
