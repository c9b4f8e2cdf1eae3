#include <stdio.h>
#include <string.h>
#include "edgegraph.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, eg_last_error_message()); return 1; } } while (0)

int main(void) {
    EgTerm *a = NULL, *b = NULL, *n = NULL;
    CHECK(eg_term_parse("1<>2 + 2<>3", &a) == EgStatus_Ok);
    CHECK(eg_term_parse("1<>2 + 1<>3", &b) == EgStatus_Ok);
    bool same = false;
    CHECK(eg_term_equivalent(a, b, &same) == EgStatus_Ok && same);

    CHECK(eg_term_normalize(a, &n) == EgStatus_Ok);
    char *text = NULL;
    CHECK(eg_term_render(n, &text) == EgStatus_Ok);
    CHECK(strcmp(text, "e >> 1 <> 2 <> 3 + 1 >> e + 2 >> e + 3 >> e") == 0);
    eg_string_free(text);

    EgTerm *bad = NULL;
    CHECK(eg_term_parse("1 >>", &bad) == EgStatus_SyntaxError && bad == NULL);
    CHECK(strncmp(eg_last_error_message(), "SyntaxError", 11) == 0);

    EgTerm *chain = NULL;
    EgPathMap *paths = NULL;
    CHECK(eg_term_parse("1 >> 2", &chain) == EgStatus_Ok);
    CHECK(eg_paths(chain, "1 3\n2 4\n", EgSemiring_Tropical, &paths) == EgStatus_Ok);
    int found = 0;
    for (size_t i = 0; i < eg_path_map_len(paths); i++) {
        EgEndKind fk, tk;
        const char *fl, *tl;
        double w;
        CHECK(eg_path_map_entry(paths, i, &fk, &fl, &tk, &tl, &w) == EgStatus_Ok);
        if (fk == EgEndKind_Pit && strcmp(fl, "1") == 0 && tk == EgEndKind_Tip && strcmp(tl, "2") == 0 && w == 7.0)
            found = 1;
    }
    CHECK(found);

    EgFlow *g = NULL;
    CHECK(eg_term_eval(chain, &g) == EgStatus_Ok);
    CHECK(eg_flow_node_count(g) == 3);

    eg_flow_free(g);
    eg_path_map_free(paths);
    eg_term_free(chain);
    eg_term_free(n);
    eg_term_free(b);
    eg_term_free(a);
    puts("ok");
    return 0;
}
