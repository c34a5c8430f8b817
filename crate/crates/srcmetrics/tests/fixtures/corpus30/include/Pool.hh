#ifndef POOL_HH
#define POOL_HH

// Fixed-capacity freelist; see Pool.icc for the definitions.
template <class T>
class Pool
{
  public:
    Pool();
    T* Acquire();
    void Release(T* item);
    int InUse() const;

  private:
    enum { kCapacity = 64 };
    T fItems[kCapacity];
    bool fUsed[kCapacity];
    int fInUse;
};

#include "Pool.icc"

#endif
