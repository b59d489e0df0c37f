#include <stdio.h>
#include <stdlib.h>
#include "primeperm.h"

#define CHECK(call)                                                          \
  do {                                                                       \
    enum PpStatus s_ = (call);                                               \
    if (s_ != PP_STATUS_OK) {                                                \
      fprintf(stderr, "%s failed: %d (%s)\n", #call, (int)s_,               \
              pp_last_error_message());                                      \
      return 1;                                                              \
    }                                                                        \
  } while (0)

int main(void) {
  PpSieve *sieve = NULL;
  CHECK(pp_sieve_for_problem_size(10, &sieve));

  PpPermutation *w = NULL;
  CHECK(pp_construct(5, sieve, &w));
  const size_t *img = pp_permutation_image(w);
  for (size_t i = 0; i < pp_permutation_len(w); i++)
    printf(i ? ",%zu" : "%zu", img[i]);
  printf("\n");
  bool ok = false;
  CHECK(pp_is_valid_solution(w, sieve, &ok));
  printf("valid=%d\n", ok);
  pp_permutation_free(w);

  char *count = NULL;
  CHECK(pp_count(10, PP_METHOD_DP, sieve, NULL, &count));
  printf("count=%s\n", count);
  pp_string_free(count);

  PpSolutions *it = NULL;
  CHECK(pp_solutions_new(4, sieve, 0, &it));
  size_t buf[4];
  bool more = false;
  int lines = 0;
  for (;;) {
    CHECK(pp_solutions_next(it, buf, 4, &more));
    if (!more) break;
    lines++;
  }
  printf("solutions=%d\n", lines);
  pp_solutions_free(it);

  size_t bad[3] = {1, 1, 2};
  enum PpStatus s = pp_validate_image(bad, 3, sieve, &ok);
  printf("malformed=%d\n", s == PP_STATUS_MALFORMED_PERMUTATION);

  pp_sieve_free(sieve);
  return 0;
}
