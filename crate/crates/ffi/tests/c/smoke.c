#include <stdio.h>
#include <string.h>

#include "ocwords.h"

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,   \
              ocw_last_error());                                       \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  OcwWord *w = NULL;
  char *s = NULL;
  size_t border[8];
  size_t n = 0;
  bool closed = false;

  CHECK(ocw_word_new("abcaacab", &w) == OCW_STATUS_OK);
  CHECK(ocw_word_oc(w, &s) == OCW_STATUS_OK);
  CHECK(strcmp(s, "10010001") == 0);
  ocw_string_free(s);
  CHECK(ocw_word_border_array(w, border, 8, &n) == OCW_STATUS_OK);
  CHECK(n == 8 && border[7] == 2 && border[3] == 1);
  CHECK(ocw_word_is_closed(w, &closed) == OCW_STATUS_OK && closed);
  ocw_word_free(w);

  CHECK(ocw_reconstruct("101001", true, &w) == OCW_STATUS_OK);
  CHECK(ocw_word_to_string(w, &s) == OCW_STATUS_OK);
  CHECK(strcmp(s, "abaaab") == 0);
  ocw_string_free(s);
  ocw_word_free(w);

  CHECK(ocw_reconstruct("110100", true, &w) == OCW_STATUS_NOT_STURMIAN);
  CHECK(w == NULL && strlen(ocw_last_error()) > 0);

  puts("ok");
  return 0;
}
