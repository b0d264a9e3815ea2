#include <stdio.h>
#include <string.h>
#include "bijection_atlas.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s\n", #cond); return 1; } } while (0)

int main(void) {
    BaPermutation *p = NULL, *q = NULL;
    char *s = NULL;
    size_t v = 0;

    CHECK(ba_perm_parse("2 6 1 3 7 4 5 8 10 9", &p) == BA_STATUS_OK);
    CHECK(ba_perm_stat(p, "dexc", &v) == BA_STATUS_OK && v == 8);
    CHECK(ba_perm_psi(p, &q) == BA_STATUS_OK);
    CHECK(ba_perm_to_string(q, &s) == BA_STATUS_OK && strcmp(s, "2 6 1 7 3 4 5 8 10 9") == 0);
    ba_string_free(s);
    ba_perm_free(q);
    ba_perm_free(p);

    CHECK(ba_catalan(10, &s) == BA_STATUS_OK && strcmp(s, "16796") == 0);
    ba_string_free(s);

    CHECK(ba_perm_parse("3 2 1", &p) == BA_STATUS_OK);
    CHECK(ba_perm_psi(p, &q) == BA_STATUS_NOT_BI_INCREASING);
    CHECK(ba_last_error() != NULL);
    ba_perm_free(p);
    puts("ok");
    return 0;
}
