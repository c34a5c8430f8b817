#ifndef VSOLID_HH
#define VSOLID_HH

/* Abstract interface for a bounded solid.

   Every concrete solid reports a volume and a surface area and can
   answer whether a point lies inside it. */

#include "Units.hh"

class VSolid
{
  public:
    VSolid();
    virtual ~VSolid();

    virtual double Volume() const = 0;       // in mm3
    virtual double SurfaceArea() const = 0;  // in mm2
    virtual bool Inside(double x, double y, double z) const = 0;

    const char* GetName() const;
    void SetName(const char* name);

  protected:
    const char* fName;  // not owned
    int fId;
};

#endif
