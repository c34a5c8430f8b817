#include "Config.hh"

/* Deliberately awkward token sequences. */

static const char* kBanner = "/* not a comment */";
static const char* kQuery = "size?a:b // still a string";
static const char kQuote = '"';
static const char kBackslash = '\\';

int CountMarkers(const char* text)
{
  int markers = 0;
  for (const char* p = text; *p; ++p) {
    if (*p == kQuote) {
      ++markers;
    }
  }
  return markers;
}

double PickScale(int mode)
{
  return mode == 0 ? 1.0   // plain
       : mode == 1 ? 10.0  /* cm */
                   : 1000.0;
}
