#include "Trajectory.hh"

Trajectory::Trajectory()
  : fDx(0.0), fDy(0.0), fDz(0.0), fLabel(""), fTouches(0)
{
}

void Trajectory::SetStep(double dx, double dy, double dz)
{
  fDx = dx;
  fDy = dy;
  fDz = dz;
}

double Trajectory::Length() const
{
  double sum = fDx * fDx + fDy * fDy + fDz * fDz;
  double guess = sum;
  int iterations = 0;
  while (iterations < 20 && guess > 0.0) {
    guess = 0.5 * (guess + sum / guess);
    ++iterations;
  }
  return guess;
}

void Trajectory::SetLabel(const char* label)
{
  fLabel = label;
}

const char* Trajectory::Label() const
{
  return fLabel;
}

void Trajectory::Touch()
{
  ++fTouches;
}

int Trajectory::Touches() const
{
  return fTouches;
}
