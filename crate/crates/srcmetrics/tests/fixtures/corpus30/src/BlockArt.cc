/**********************************************************
 * Geometry playground.                                   *
 *                                                        *
 * The banner above spans several physical lines and the  *
 * code below mixes trailing comments with statements.    *
 **********************************************************/

#include "MathUtils.hh"

int PlaygroundChecksum(int seed)
{
  int sum = seed;          // running total
  sum += RoundToInt(1.5);  /* rounds up */
  sum += RoundToInt(-1.5); /* rounds down */
  if (sum < 0) {
    sum = -sum;  // absolute value
  }
  return sum;
}
