/* Build: cc examples/smoke.c -Iinclude -L../../target/debug -l:librenner_ffi.a -lpthread -ldl -lm -o smoke */
#include <stdio.h>
#include "renner_ffi.h"

int main(void) {
    RennerContext *ctx = NULL;
    char *json = NULL;
    if (renner_context_new(RENNER_MONOID_KIND_SYMPLECTIC, 2, &ctx) != RENNER_STATUS_OK) {
        fprintf(stderr, "%s\n", renner_last_error());
        return 1;
    }
    if (renner_reduce(ctx, "0,3,0,0", &json) == RENNER_STATUS_OK) {
        printf("reduce: %s\n", json);
        renner_string_free(json);
    }
    renner_context_free(ctx);

    RennerTable *t = NULL;
    if (renner_table_new(RENNER_MONOID_KIND_ROOK, 2, RENNER_TABLE_KIND_MQ, 0, &t) != RENNER_STATUS_OK) {
        fprintf(stderr, "%s\n", renner_last_error());
        return 1;
    }
    for (size_t i = 0; i < renner_table_rows(t); i++) {
        for (size_t j = 0; j < renner_table_cols(t); j++) {
            char *e = NULL;
            renner_table_entry(t, i, j, &e);
            printf("%s%s", j ? "\t" : "", e);
            renner_string_free(e);
        }
        printf("\n");
    }
    renner_table_free(t);

    if (renner_table_new(RENNER_MONOID_KIND_SYMPLECTIC, 9, RENNER_TABLE_KIND_M, 0, &t) == RENNER_STATUS_UNSUPPORTED_SIZE)
        printf("refused: %s\n", renner_last_error());
    return 0;
}
