/*
 * Copyright 2026 The vqe-taper Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the vqe library: Pauli sums, Jordan-Wigner Hamiltonians,
 * Z2 qubit tapering, exact diagonalization, hardware-efficient trial states
 * and SPSA experiment sweeps.
 *
 * Conventions
 *   - Every fallible call returns a vqe_status; VQE_OK is 0. On failure the
 *     out-parameters are untouched and vqe_last_error() describes the
 *     problem (thread-local, valid until the next failing call on the same
 *     thread).
 *   - Handles are opaque and owned by the caller; release them with the
 *     matching *_free function. Freeing NULL is a no-op.
 *   - Strings returned through char** are heap-allocated and must be
 *     released with vqe_string_free.
 *   - Qubits are 1-based; qubit 1 is the most significant basis-index bit.
 */
#ifndef VQE_VQE_H_
#define VQE_VQE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define VQE_API __declspec(dllexport)
#else
#define VQE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vqe_status {
  VQE_OK = 0,
  VQE_ERR_INVALID_ARGUMENT = 1,
  VQE_ERR_DIMENSION = 2,
  VQE_ERR_PARSE = 3,
  VQE_ERR_IO = 4,
  VQE_ERR_NOT_HERMITIAN = 5,
  VQE_ERR_NOT_SYMMETRY = 6,
  VQE_ERR_NUMERICAL = 7,
  VQE_ERR_INTERNAL = 8
} vqe_status;

typedef enum vqe_symmetry_mode {
  VQE_SYMMETRIES_MAXIMAL = 0,       /* maximal abelian symmetry group */
  VQE_SYMMETRIES_NUMBER_PARITY = 1  /* spin-up / spin-down number parities */
} vqe_symmetry_mode;

typedef enum vqe_entangler {
  VQE_ENTANGLER_CNOT_CHAIN = 0,
  VQE_ENTANGLER_CNOT_PAIRS = 1,
  VQE_ENTANGLER_CMNOT = 2,
  VQE_ENTANGLER_PST = 3,
  VQE_ENTANGLER_ISWAP2 = 4
} vqe_entangler;

typedef struct vqe_pauli_sum vqe_pauli_sum;
typedef struct vqe_integrals vqe_integrals;
typedef struct vqe_taper_result vqe_taper_result;

VQE_API const char* vqe_version(void);
VQE_API const char* vqe_last_error(void);
VQE_API const char* vqe_status_name(vqe_status status);
VQE_API void vqe_string_free(char* s);

/* ---- Pauli sums ------------------------------------------------------- */

/* JSON ({"m":..,"terms":[{"re":..,"im":..,"axes":"XZIY"}]}) or text
 * ("re im AXES" per line, '#' comments). */
VQE_API vqe_status vqe_pauli_sum_load(const char* path, vqe_pauli_sum** out);
VQE_API vqe_status vqe_pauli_sum_parse(const char* content, vqe_pauli_sum** out);
VQE_API void vqe_pauli_sum_free(vqe_pauli_sum* h);
VQE_API vqe_status vqe_pauli_sum_num_qubits(const vqe_pauli_sum* h, int* out);
VQE_API vqe_status vqe_pauli_sum_num_terms(const vqe_pauli_sum* h, size_t* out);
VQE_API vqe_status vqe_pauli_sum_to_json(const vqe_pauli_sum* h, char** out);
VQE_API vqe_status vqe_pauli_sum_to_text(const vqe_pauli_sum* h, char** out);

/* ---- Molecular integrals and Jordan-Wigner ---------------------------- */

VQE_API vqe_status vqe_integrals_load(const char* path, vqe_integrals** out);
VQE_API void vqe_integrals_free(vqe_integrals* mi);
VQE_API vqe_status vqe_integrals_num_spin_orbitals(const vqe_integrals* mi, int* out);
/* *has_value is set to 0 when the file records no reference energy. */
VQE_API vqe_status vqe_integrals_reference_energy(const vqe_integrals* mi, double* out, int* has_value);
VQE_API vqe_status vqe_qubit_hamiltonian(const vqe_integrals* mi, vqe_pauli_sum** out);

/* ---- Exact diagonalization (m <= 12) ---------------------------------- */

VQE_API vqe_status vqe_ground_energy(const vqe_pauli_sum* h, double* out);
/* Writes min(capacity, 2^m) ascending eigenvalues; *count receives 2^m. */
VQE_API vqe_status vqe_spectrum(const vqe_pauli_sum* h, double* eigenvalues, size_t capacity,
                                size_t* count);

/* ---- Tapering --------------------------------------------------------- */

/* sector: NULL selects the ground sector by exhaustive search; otherwise a
 * string of '+'/'-', one per generator. */
VQE_API vqe_status vqe_taper(const vqe_pauli_sum* h, vqe_symmetry_mode mode, const char* sector,
                             vqe_taper_result** out);
VQE_API void vqe_taper_result_free(vqe_taper_result* t);
/* A new handle holding the tapered Hamiltonian. */
VQE_API vqe_status vqe_taper_result_hamiltonian(const vqe_taper_result* t, vqe_pauli_sum** out);
/* JSON: generators, pivot qubits and labels, permutation, sector, energies. */
VQE_API vqe_status vqe_taper_result_report(const vqe_taper_result* t, char** out);
/* JSON: the Clifford part as a Pauli sum plus the qubit permutation, and for
 * m <= 12 the dense unitary as rows of [re, im] pairs. */
VQE_API vqe_status vqe_taper_result_unitary(const vqe_taper_result* t, char** out);

/* ---- Trial states ----------------------------------------------------- */

VQE_API vqe_status vqe_entangler_from_name(const char* name, vqe_entangler* out);
/* D = (3 depth + 2) m. */
VQE_API vqe_status vqe_parameter_count(int m, int depth, size_t* out);
/* <psi(theta)|H|psi(theta)>; theta_len must equal vqe_parameter_count. */
VQE_API vqe_status vqe_energy(const vqe_pauli_sum* h, const double* theta, size_t theta_len, int depth,
                              vqe_entangler entangler, double* out);

/* ---- Experiments ------------------------------------------------------ */

/* Runs the sweep described by a YAML/JSON config and writes its outputs.
 * Returns VQE_OK when the sweep itself could run, even if individual runs
 * failed; *failed_runs (optional) receives their number and *report
 * (optional) the report JSON. */
VQE_API vqe_status vqe_run_experiment(const char* config_path, const char* output_dir_override,
                                      size_t* failed_runs, char** report);

#ifdef __cplusplus
}
#endif

#endif /* VQE_VQE_H_ */
