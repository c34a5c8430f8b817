#ifndef LEGACY_API_H
#define LEGACY_API_H

/* C-linkage surface kept for old clients. */

#ifdef __cplusplus
extern "C" {
#endif

int legacy_solid_count(void);
double legacy_total_volume(void);

#ifdef __cplusplus
}
#endif

#endif /* LEGACY_API_H */
