#ifndef PRIMEPERM_H
#define PRIMEPERM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum PpMethod {
  PP_METHOD_AUTO = 0,
  PP_METHOD_NAIVE = 1,
  PP_METHOD_DP = 2,
  PP_METHOD_RYSER = 3,
} PpMethod;

// Result of every fallible call.
typedef enum PpStatus {
  PP_STATUS_OK = 0,
  PP_STATUS_NULL_POINTER = 1,
  PP_STATUS_OUT_OF_RANGE = 2,
  PP_STATUS_SIEVE_TOO_LARGE = 3,
  PP_STATUS_BERTRAND_VIOLATION = 4,
  PP_STATUS_MALFORMED_PERMUTATION = 5,
  PP_STATUS_CAP_EXCEEDED = 6,
  PP_STATUS_PARSE = 7,
  PP_STATUS_BUFFER_TOO_SMALL = 8,
  PP_STATUS_PANIC = 99,
} PpStatus;

// Opaque permutation of 1..n.
typedef struct PpPermutation PpPermutation;

// Opaque primality table.
typedef struct PpSieve PpSieve;

// Opaque lexicographic stream of solutions.
typedef struct PpSolutions PpSolutions;

// Caps for the counters. Obtain defaults from `pp_count_config_default`.
typedef struct PpCountConfig {
  size_t naive_cap;
  size_t dp_cap;
  size_t ryser_cap;
  // Naive counting walks all n! permutations instead of backtracking.
  bool strict_all_permutations;
} PpCountConfig;

// Message for the last failed call on this thread, or NULL if none. The
// pointer stays valid until the next failing call on the same thread.
const char *pp_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *pp_version(void);

// Builds a sieve answering primality for 0..=limit.
enum PpStatus pp_sieve_new(size_t limit, struct PpSieve **out);

// Sieve large enough for every sum that occurs at problem size n.
enum PpStatus pp_sieve_for_problem_size(size_t n, struct PpSieve **out);

void pp_sieve_free(struct PpSieve *sieve);

// Largest value the sieve answers for; 0 for a NULL handle.
size_t pp_sieve_limit(const struct PpSieve *sieve);

enum PpStatus pp_sieve_is_prime(const struct PpSieve *sieve, size_t m, bool *out);

enum PpStatus pp_sieve_least_prime_greater_than(const struct PpSieve *sieve, size_t k, size_t *out);

// Number of primes strictly below `bound`.
enum PpStatus pp_sieve_count_primes_below(const struct PpSieve *sieve, size_t bound, size_t *out);

// Copies `len` entries of one-line notation into a new permutation handle.
// `image` may be NULL when `len` is 0.
enum PpStatus pp_permutation_from_image(const size_t *image,
                                        size_t len,
                                        struct PpPermutation **out);

// Parses comma-separated one-line notation such as `1,5,4,3,2`.
enum PpStatus pp_permutation_parse(const char *text, struct PpPermutation **out);

void pp_permutation_free(struct PpPermutation *perm);

// Domain size n; 0 for a NULL handle.
size_t pp_permutation_len(const struct PpPermutation *perm);

// Borrowed pointer to the n entries π(1), ..., π(n). Valid while the handle
// lives; NULL for a NULL handle.
const size_t *pp_permutation_image(const struct PpPermutation *perm);

// Block-reversal witness for n. The sieve must cover 2n.
enum PpStatus pp_construct(size_t n, const struct PpSieve *sieve, struct PpPermutation **out);

// Sets `*out` to whether every sum k + π(k) is prime.
enum PpStatus pp_is_valid_solution(const struct PpPermutation *perm,
                                   const struct PpSieve *sieve,
                                   bool *out);

// Like `pp_is_valid_solution` on a raw array; a non-bijection yields
// `PP_STATUS_MALFORMED_PERMUTATION`.
enum PpStatus pp_validate_image(const size_t *image,
                                size_t len,
                                const struct PpSieve *sieve,
                                bool *out);

struct PpCountConfig pp_count_config_default(void);

// Exact number of solutions for n as a decimal string. `config` may be NULL
// for defaults. Release the string with `pp_string_free`.
enum PpStatus pp_count(size_t n,
                       enum PpMethod method,
                       const struct PpSieve *sieve,
                       const struct PpCountConfig *config,
                       char **out);

void pp_string_free(char *s);

// Starts a lexicographic stream of all solutions for n. `limit` of 0 means
// no limit. The stream does not borrow the sieve.
enum PpStatus pp_solutions_new(size_t n,
                               const struct PpSieve *sieve,
                               size_t limit,
                               struct PpSolutions **out);

// Writes the next solution into `buf` (which must hold n entries) and sets
// `*has_next`. When the stream is exhausted `*has_next` is false and `buf`
// is left untouched.
enum PpStatus pp_solutions_next(struct PpSolutions *stream,
                                size_t *buf,
                                size_t buf_len,
                                bool *has_next);

void pp_solutions_free(struct PpSolutions *stream);

#endif  /* PRIMEPERM_H */
