#ifndef AUTOMATA_H
#define AUTOMATA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Error codes returned by every fallible function.
 */
typedef enum automata_status {
  AUTOMATA_OK = 0,
  /**
   * A pointer argument was null.
   */
  AUTOMATA_ERR_NULL = 1,
  /**
   * Malformed JSON or an invalid automaton description.
   */
  AUTOMATA_ERR_PARSE = 2,
  /**
   * An operation precondition was violated (wrong class, bad name, ...).
   */
  AUTOMATA_ERR_PRECONDITION = 3,
  /**
   * A search or enumeration budget was exceeded.
   */
  AUTOMATA_ERR_BUDGET = 4,
} automata_status;

/**
 * Opaque automaton handle.
 */
typedef struct automata_nfa automata_nfa;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent error on this thread. Owned by the
 * library; valid until the next failing call on the same thread.
 */
const char *automata_last_error(void);

/**
 * Frees a string returned by this library. A null pointer is a no-op.
 */
void automata_string_free(char *s);

/**
 * Frees an automaton handle. A null pointer is a no-op.
 */
void automata_nfa_free(struct automata_nfa *m);

/**
 * Parses an automaton from its JSON description into a fresh handle.
 */
enum automata_status automata_nfa_from_json(const char *text, struct automata_nfa **out);

/**
 * Serializes an automaton to its JSON description.
 */
enum automata_status automata_nfa_to_json(const struct automata_nfa *m, char **out);

/**
 * Builds a member of a named witness family: "all-final", "asif", "asi",
 * "suff", "fact", "jiraskova", or "jiraskova-asf".
 */
enum automata_status automata_witness(const char *family, uintptr_t n, struct automata_nfa **out);

enum automata_status automata_nfa_state_count(const struct automata_nfa *m, uintptr_t *out);

/**
 * Number of states of the minimal complete DFA for the automaton's language.
 */
enum automata_status automata_state_complexity(const struct automata_nfa *m, uintptr_t *out);

/**
 * Whether the automaton accepts every word over its alphabet.
 */
enum automata_status automata_universal(const struct automata_nfa *m, bool *out);

/**
 * Shortest rejected word rendered with the automaton's symbol names, or a
 * null pointer when the automaton is universal.
 */
enum automata_status automata_shortest_rejected(const struct automata_nfa *m, char **out);

/**
 * Applies a named reduction: "asf", "asif", "recode4to2", "asf3-asif2",
 * "augment-asf", or "augment-asif".
 */
enum automata_status automata_reduce(const char *name,
                                     const struct automata_nfa *m,
                                     struct automata_nfa **out);

/**
 * Tests closedness of the language of a complete DFA (given as a handle
 * whose automaton is deterministic). `kind` is "prefix", "suffix", or
 * "factor". On a violation, `*witness_out` receives the counterexample word
 * (else null).
 */
enum automata_status automata_is_closed(const struct automata_nfa *m,
                                        const char *kind,
                                        bool *out,
                                        char **witness_out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* AUTOMATA_H */
