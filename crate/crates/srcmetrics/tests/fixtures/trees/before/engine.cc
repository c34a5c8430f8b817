#include "engine.hh"

double Engine::Advance(double dt)
{
  fTime += dt;
  return fTime;
}

double Engine::Time() const
{
  return fTime;
}
