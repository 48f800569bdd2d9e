#ifndef SUBORBIT_LAB_H
#define SUBORBIT_LAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result of every fallible call.
 */
typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = 1,
  SL_STATUS_INVALID_ARGUMENT = 2,
  SL_STATUS_INVALID_PERMUTATION = 3,
  SL_STATUS_NOT_TRANSITIVE = 4,
  SL_STATUS_CLOSURE_CAP_EXCEEDED = 5,
  SL_STATUS_OUT_OF_RANGE = 6,
  SL_STATUS_EXPRESSION = 7,
  SL_STATUS_WRONG_KIND = 8,
  SL_STATUS_INTERNAL = 9,
  SL_STATUS_PANIC = 10,
} SlStatus;

/*
 A group given by its multiplication table.
 */
typedef struct SlGroupTable SlGroupTable;

/*
 A permutation group.
 */
typedef struct SlPermGroup SlPermGroup;

/*
 Suborbit profile of a transitive group at a base point.
 */
typedef struct SlProfile SlProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Copies the calling thread's last error message, NUL-terminated and
 truncated to `capacity`, into `buffer`. Returns the full message length
 without the terminator. `buffer` may be null when `capacity` is 0.

 # Safety
 `buffer` must be valid for `capacity` bytes.
 */
size_t sl_last_error_message(char *buffer, size_t capacity);

/*
 Group generated by `generator_count` permutations of `0..degree`, laid
 out one after another in `images` (`generator_count * degree` entries).

 # Safety
 `images` must be valid for that many reads and `out` for one write.
 */
enum SlStatus sl_perm_group_new(size_t degree,
                                const uint32_t *images,
                                size_t generator_count,
                                struct SlPermGroup **out);

/*
 Permutation group of a constructor expression such as `cosets(h12)`;
 table-valued expressions give their right regular action.

 # Safety
 `expr` must be a NUL-terminated string and `out` valid for one write.
 */
enum SlStatus sl_perm_group_from_expression(const char *expr, struct SlPermGroup **out);

/*
 # Safety
 `group` must come from this library and not be used afterwards.
 */
void sl_perm_group_free(struct SlPermGroup *group);

/*
 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_perm_group_order(const struct SlPermGroup *group, uint64_t *out);

/*
 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_perm_group_degree(const struct SlPermGroup *group, size_t *out);

/*
 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_perm_group_is_transitive(const struct SlPermGroup *group, bool *out);

/*
 Suborbit profile at `base`; fails with `NotTransitive` for intransitive
 groups.

 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_suborbit_profile_new(const struct SlPermGroup *group,
                                      size_t base,
                                      struct SlProfile **out);

/*
 # Safety
 `profile` must come from this library and not be used afterwards.
 */
void sl_suborbit_profile_free(struct SlProfile *profile);

/*
 Share of points in suborbits of size at most 2, in lowest terms.

 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_suborbit_profile_ratio(const struct SlProfile *profile,
                                        uint64_t *numerator,
                                        uint64_t *denominator);

/*
 Number of points fixed by the point stabilizer.

 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_suborbit_profile_fixed_points(const struct SlProfile *profile, size_t *out);

/*
 Number of points lying in suborbits of size exactly `size`.

 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_suborbit_profile_part_count(const struct SlProfile *profile,
                                             size_t size,
                                             size_t *out);

/*
 Writes the sorted points of part `size` into `buffer` (at most
 `capacity`) and the part's full length into `length`.

 # Safety
 `buffer` must be valid for `capacity` writes; other pointers valid.
 */
enum SlStatus sl_suborbit_profile_part(const struct SlProfile *profile,
                                       size_t size,
                                       uint32_t *buffer,
                                       size_t capacity,
                                       size_t *length);

/*
 Multiplication table of a constructor expression such as
 `central(dihedral(8),dihedral(8),2,2)`.

 # Safety
 `expr` must be a NUL-terminated string and `out` valid for one write.
 */
enum SlStatus sl_group_table_construct(const char *expr, struct SlGroupTable **out);

/*
 # Safety
 `table` must come from this library and not be used afterwards.
 */
void sl_group_table_free(struct SlGroupTable *table);

/*
 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_group_table_order(const struct SlGroupTable *table, size_t *out);

/*
 Product `a b`; element 0 is the identity.

 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_group_table_mul(const struct SlGroupTable *table,
                                 uint32_t a,
                                 uint32_t b,
                                 uint32_t *out);

/*
 `(|R| + |{x : x^2 = 1}|) / 2`: the base-2 logarithm of the number of
 inverse-closed subsets.

 # Safety
 Pointers must be valid.
 */
enum SlStatus sl_group_table_c_of_r(const struct SlGroupTable *table, size_t *out);

/*
 Whether `numerator/denominator` is at most 1/2 or equals `(q + 1) / 2q`
 with `2q` a positive integer. `q` is written as 0/0 for ratios at most
 1/2.

 # Safety
 Output pointers must be valid.
 */
enum SlStatus sl_conjecture_check(uint64_t numerator,
                                  uint64_t denominator,
                                  bool *conforms,
                                  uint64_t *q_numerator,
                                  uint64_t *q_denominator);

/*
 Runs the two-generated GL(4,2) subgroup scan. `passed` reports the
 structural checks; `nonconforming` counts frame ratios above 1/2 not of
 the form `(q + 1) / 2q` with `2q` integral.

 # Safety
 Output pointers must be valid.
 */
enum SlStatus sl_verify_gl42(bool *passed, size_t *nonconforming);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUBORBIT_LAB_H */
