#include "liegen/liegen.h"

#include <string.h>

int liegen_c_header_smoke(void) {
  liegen_matrix* x = NULL;
  liegen_matrix* y = NULL;
  char* text = NULL;
  int ok;
  if (liegen_generator_pair("corner", 3, NULL, &x, &y) != LIEGEN_OK) return 1;
  ok = liegen_matrix_entry(y, 3, 1, &text) == LIEGEN_OK && strcmp(text, "1") == 0;
  liegen_string_free(text);
  liegen_matrix_free(x);
  liegen_matrix_free(y);
  return ok ? 0 : 1;
}
