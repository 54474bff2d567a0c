#include <stdio.h>
#include <string.h>

#include "symx.h"

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,    \
                    #cond, symx_last_error());                         \
            return 1;                                                  \
        }                                                              \
    } while (0)

int main(void) {
    const uint64_t handles[] = {1, 3};
    SymxDatum *d = NULL;
    EXPECT(symx_datum_new(8, false, 2, handles, 2, NULL, 0, NULL, 0, &d) == SYMX_STATUS_OK);

    uint64_t genus = 0;
    EXPECT(symx_datum_genus(d, &genus) == SYMX_STATUS_OK && genus == 1);

    uint32_t mask = 0;
    EXPECT(symx_classify(d, &mask) == SYMX_STATUS_OK);
    EXPECT(mask == 1u << SYMX_EXT_TYPE_MP);

    bool ok = false;
    EXPECT(symx_check(d, SYMX_EXT_TYPE_PP, &ok) == SYMX_STATUS_TYPE_MISMATCH);
    EXPECT(strlen(symx_last_error()) > 0);

    char *json = NULL;
    EXPECT(symx_verdicts_json(d, &json) == SYMX_STATUS_OK);
    EXPECT(strstr(json, "\"MP(3)\"") != NULL);
    symx_string_free(json);

    SymxDatum *e = NULL;
    EXPECT(symx_datum_from_json("{\"n\":8,\"orientable\":false,\"h\":2,\"handles\":[3,1],"
                                "\"boundary\":[],\"cones\":[]}",
                                &e) == SYMX_STATUS_OK);
    EXPECT(symx_are_conjugate(d, e, &ok) == SYMX_STATUS_OK && ok);

    EXPECT(symx_lens_admits_klein_bottle(8, 3, &ok) == SYMX_STATUS_OK && ok);

    symx_datum_free(e);
    symx_datum_free(d);
    printf("ok\n");
    return 0;
}
