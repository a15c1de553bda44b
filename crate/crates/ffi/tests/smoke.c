#include <stdio.h>
#include <string.h>

#include "levisom.h"

static int fail(const char *what) {
    const char *msg = lev_last_error_message();
    fprintf(stderr, "%s failed: %s\n", what, msg ? msg : "(no message)");
    return 1;
}

int main(void) {
    char *d = NULL;
    if (lev_distance("0", "1", "1", "1/2", &d) != LEV_STATUS_OK) return fail("lev_distance");
    printf("distance %s\n", d);
    int ok = strcmp(d, "1/2") == 0;
    lev_string_free(d);

    LevLanguage *lang = NULL;
    if (lev_construct_graph_language("petersen", &lang) != LEV_STATUS_OK) return fail("construct");
    LevGroup *group = NULL;
    if (lev_isometry_group(lang, "1", "1", &group) != LEV_STATUS_OK) return fail("isometry group");
    char *order = NULL;
    if (lev_group_order(group, &order) != LEV_STATUS_OK) return fail("order");
    printf("order %s degree %zu\n", order, lev_group_degree(group));
    ok = ok && strcmp(order, "120") == 0 && lev_group_degree(group) == 10;
    lev_string_free(order);
    lev_group_free(group);
    lev_language_free(lang);

    if (lev_distance("0", "#", "1", "1", &d) != LEV_STATUS_PARSE_ERROR) return fail("expected parse error");
    ok = ok && lev_last_error_message() != NULL;
    return ok ? 0 : 1;
}
