/* Minimal consumer of the C API: builds the 7-node chain, prints its
 * distance frequencies and statistics, and checks two arrays for
 * realizability. Exit status is non-zero on any unexpected result. */
#include <stdio.h>
#include "netdist.h"

static int check(NdStatus s, const char *what) {
    if (s != ND_STATUS_OK) {
        const char *msg = nd_last_error_message();
        fprintf(stderr, "%s failed (%d): %s\n", what, (int)s, msg ? msg : "?");
        return 1;
    }
    return 0;
}

int main(void) {
    NdGraph *chain = NULL;
    if (check(nd_graph_chain(7, &chain), "nd_graph_chain")) return 1;

    uint64_t alpha[6];
    if (check(nd_graph_alpha(chain, alpha, 6), "nd_graph_alpha")) return 1;
    printf("alpha:");
    for (int i = 0; i < 6; i++) printf(" %llu", (unsigned long long)alpha[i]);
    printf("\n");

    NdStats stats;
    if (check(nd_alpha_stats(alpha, 6, &stats), "nd_alpha_stats")) return 1;
    printf("average %lld/%lld median %lld/%lld gini %lld/%lld\n",
           (long long)stats.average.num, (long long)stats.average.den,
           (long long)stats.median.num, (long long)stats.median.den,
           (long long)stats.gini.num, (long long)stats.gini.den);
    if (stats.average.num != 8 || stats.average.den != 3) return 2;
    if (stats.gini.num != 5 || stats.gini.den != 18) return 2;
    nd_graph_free(chain);

    uint64_t bad[3] = {4, 1, 1};
    NdRealizability verdict;
    uint64_t examined = 0;
    if (check(nd_is_realizable(bad, 3, 0, &verdict, &examined, NULL), "nd_is_realizable")) return 1;
    printf("4,1,1: %s after %llu candidates\n",
           verdict == ND_REALIZABILITY_NOT_REALIZABLE ? "not realizable" : "realizable",
           (unsigned long long)examined);
    if (verdict != ND_REALIZABILITY_NOT_REALIZABLE) return 3;

    uint64_t good[4] = {4, 4, 2, 0};
    NdGraph *witness = NULL;
    if (check(nd_is_realizable(good, 4, 0, &verdict, &examined, &witness), "nd_is_realizable")) return 1;
    if (verdict != ND_REALIZABILITY_REALIZABLE || witness == NULL) return 3;
    char *edges = nd_graph_to_edge_list(witness);
    printf("4,4,2,0 witness:\n%s", edges);
    nd_string_free(edges);
    nd_graph_free(witness);
    return 0;
}
