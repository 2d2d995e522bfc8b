/* Links against the static library and exercises the public header. */
#include <stdio.h>
#include <string.h>

#include "cayley.h"

#define CHECK(call)                                                        \
  do {                                                                     \
    CayleyStatus st_ = (call);                                             \
    if (st_ != CAYLEY_STATUS_OK) {                                         \
      const char *msg_ = cayley_last_error_message();                      \
      fprintf(stderr, "%s failed: %d (%s)\n", #call, (int)st_,             \
              msg_ ? msg_ : "no message");                                 \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  CayleyTable *table = NULL;
  CHECK(cayley_table_new(10, &table));

  char *t7 = NULL;
  CHECK(cayley_tree_count(table, 7, &t7));
  if (strcmp(t7, "16807") != 0) {
    fprintf(stderr, "T_7 = %s\n", t7);
    return 1;
  }
  cayley_string_free(t7);

  CayleySeries *lagrange = NULL;
  CHECK(cayley_series_lagrange_exp(4, &lagrange));
  char *c4 = NULL;
  CHECK(cayley_series_coeff(lagrange, 4, &c4));
  if (strcmp(c4, "8/3") != 0) {
    fprintf(stderr, "[S^4] = %s\n", c4);
    return 1;
  }
  cayley_string_free(c4);
  cayley_series_free(lagrange);

  bool passed = false;
  CHECK(cayley_verify(CAYLEY_SUITE_ORACLE, 6, &passed));
  if (!passed) {
    return 1;
  }

  char *bad = NULL;
  if (cayley_tree_count(table, 0, &bad) != CAYLEY_STATUS_DOMAIN ||
      cayley_last_error_message() == NULL) {
    return 1;
  }

  cayley_table_free(table);
  puts("ok");
  return 0;
}
