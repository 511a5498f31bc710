#include <stdio.h>
#include <string.h>
#include "gonograph.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); return 1; } } while (0)

int main(void) {
    GonoGraph *g = NULL;
    CHECK(gono_graph_strip(8, &g) == GONO_STATUS_OK);
    CHECK(gono_graph_vertex_count(g) == 9);

    int64_t trees = 0;
    CHECK(gono_spanning_tree_count(g, &trees) == GONO_STATUS_OK);
    CHECK(trees == 987);

    int64_t degree = 0;
    int64_t witness[9];
    CHECK(gono_gonality(g, 1, &degree, witness) == GONO_STATUS_OK);
    CHECK(degree == 5);

    GonoSet *a = NULL;
    CHECK(gono_set_from_graph(g, &a) == GONO_STATUS_OK);
    uint32_t m = 0;
    bool found = false;
    CHECK(gono_set_covering_number(a, &m, &found) == GONO_STATUS_OK);
    CHECK(found && m == 7);

    CHECK(gono_two_forest_count(g, 99, 0, &trees) == GONO_STATUS_VERTEX_OUT_OF_RANGE);
    CHECK(strstr(gono_last_error_message(), "out of range") != NULL);

    gono_set_free(a);
    gono_graph_free(g);
    puts("ok");
    return 0;
}
