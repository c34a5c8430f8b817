#ifndef VISITOR_HH
#define VISITOR_HH

class VSolid;

// Double-dispatch hook over the solid hierarchy.
class Visitor
{
  public:
    virtual ~Visitor();
    virtual void Visit(VSolid* solid) = 0;
};

// Accumulates the total volume of everything it visits.
class VolumeVisitor : public Visitor
{
  public:
    VolumeVisitor();
    virtual void Visit(VSolid* solid);
    double Total() const;

  private:
    double fTotal;
};

// Counts visits without inspecting the solid.
class CountingVisitor : public VolumeVisitor
{
  public:
    CountingVisitor();
    virtual void Visit(VSolid* solid);
    int Visits() const { return fVisits; }

  private:
    int fVisits;
};

#endif
