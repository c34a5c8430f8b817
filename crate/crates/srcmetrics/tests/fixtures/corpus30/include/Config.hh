#ifndef CONFIG_HH
#define CONFIG_HH

int LoadConfig(const char* path);     // returns entries read
int ConfigInt(const char* key);       /* last loaded wins */
double ConfigDouble(const char* key); // 0.0 when missing

/* Tuning knobs, all overridable at load time. */
#define CONFIG_MAX_ENTRIES 128
#define CONFIG_KEY_LENGTH 64 /* bytes per key */

enum TraceLevel { kSilent, kTerse, kVerbose };

// Packed per-run options.
struct RunFlags
{
    unsigned checkOverlaps : 1;
    unsigned dryRun : 1;
    unsigned traceLevel : 2;
    unsigned reserved : 4;
};

int DecodeTraceLevel(const RunFlags& flags);

#endif
