#!/usr/bin/env python3
# Copyright 2026 The vqe-taper Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the spin-orbital integral fixtures under data/.

Requires pyscf. Run once; the JSON outputs are checked in so the C++ build
never needs a chemistry package.

Conventions written into every file:
  * H = V_nn + sum_pq h_pq a+_p a_q + 1/2 sum_pqrs h_pqrs a+_p a+_q a_r a_s
  * h_pqrs = (ps|qr) in chemist notation, i.e. <pq|sr>
  * spin orbitals interleaved: 0-based even index = alpha (up), odd = beta
  * reference_ground_energy = min over every (n_alpha, n_beta) sector of the
    FCI energy in the chosen orbital space, i.e. the lowest eigenvalue of the
    qubit Hamiltonian over the whole Fock space.
"""

import argparse
import json
import os

import numpy as np
from pyscf import ao2mo, fci, gto, scf


def spin_orbital_integrals(h1, eri):
    n = h1.shape[0]
    m = 2 * n
    h_pq = np.zeros((m, m))
    h_pqrs = np.zeros((m, m, m, m))
    for p in range(m):
        for q in range(m):
            if p % 2 == q % 2:
                h_pq[p, q] = h1[p // 2, q // 2]
    for p in range(m):
        for q in range(m):
            for r in range(m):
                for s in range(m):
                    # spin(p) == spin(s) and spin(q) == spin(r)
                    if p % 2 == s % 2 and q % 2 == r % 2:
                        h_pqrs[p, q, r, s] = eri[p // 2, s // 2, q // 2, r // 2]
    return h_pq, h_pqrs


def fock_space_ground(h1, eri, ecore):
    n = h1.shape[0]
    best = None
    for na in range(n + 1):
        for nb in range(n + 1):
            if na + nb == 0:
                e = ecore
            else:
                e, _ = fci.direct_spin1.kernel(h1, eri, n, (na, nb), ecore=ecore,
                                               conv_tol=1e-12)
            best = e if best is None else min(best, e)
    return float(best)


def build(atom, unit, active, label, extra):
    mol = gto.M(atom=atom, basis="sto-3g", unit=unit, verbose=0)
    mf = scf.RHF(mol)
    mf.conv_tol = 1e-12
    mf.kernel()
    mo = mf.mo_coeff if active is None else mf.mo_coeff[:, active]
    n = mo.shape[1]
    h1 = mo.T @ mf.get_hcore() @ mo
    eri = ao2mo.restore(1, ao2mo.kernel(mol, mo), n)
    h1[np.abs(h1) < 1e-13] = 0.0
    eri[np.abs(eri) < 1e-13] = 0.0
    vnn = float(mol.energy_nuc())
    h_pq, h_pqrs = spin_orbital_integrals(h1, eri)
    meta = {
        "molecule": label,
        "geometry": atom,
        "unit": unit,
        "basis": "STO-3G",
        "generator": "pyscf RHF molecular orbitals",
        "active_orbitals": "all" if active is None else list(active),
        "spin_ordering": "interleaved: mode 1 (1-based odd) = up, mode 2 = down, ...",
        "two_electron_convention": "h_pqrs = (ps|qr); H has 1/2 sum h_pqrs a+p a+q a_r a_s",
    }
    meta.update(extra)
    return {
        "n_spin_orbitals": 2 * n,
        "V_nn": vnn,
        "h_pq": h_pq.tolist(),
        "h_pqrs": h_pqrs.tolist(),
        "metadata": meta,
        "reference_ground_energy": fock_space_ground(h1, eri, vnn),
    }


def write(path, obj):
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")
    print(f"{path}: m={obj['n_spin_orbitals']} E_ref={obj['reference_ground_energy']:.12f}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "data"))
    args = ap.parse_args()
    out = os.path.abspath(args.out)
    os.makedirs(os.path.join(out, "h2_sweep"), exist_ok=True)

    write(os.path.join(out, "h2_sto3g_0.735A.json"),
          build("H 0 0 0; H 0 0 0.735", "Angstrom", None, "H2", {"bond_length": 0.735}))

    # Bond lengths in Bohr: 0.392 to 0.931 in steps of 0.049.
    for i in range(12):
        d = round(0.392 + 0.049 * i, 3)
        write(os.path.join(out, "h2_sweep", f"h2_{d:.3f}a0.json"),
              build(f"H 0 0 0; H 0 0 {d}", "Bohr", None, "H2", {"bond_length_bohr": d}))

    # LiH on the x axis; keep the sigma orbitals (Li 1s, 2s, 2p_x and H 1s
    # character), drop the two pi orbitals.
    mol = gto.M(atom="Li 0 0 0; H 1.595 0 0", basis="sto-3g", verbose=0)
    mf = scf.RHF(mol).run(conv_tol=1e-12)
    ao_px = [i for i, l in enumerate(mol.ao_labels()) if "py" in l or "pz" in l]
    pi_weight = (mf.mo_coeff[ao_px, :] ** 2).sum(axis=0)
    sigma = [i for i in range(mf.mo_coeff.shape[1]) if pi_weight[i] < 1e-8]
    write(os.path.join(out, "lih_sto3g_1.595A.json"),
          build("Li 0 0 0; H 1.595 0 0", "Angstrom", sigma, "LiH", {"bond_length": 1.595}))


if __name__ == "__main__":
    main()
