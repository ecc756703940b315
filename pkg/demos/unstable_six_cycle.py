"""The admissible-but-unstable pair: a directed 6-cycle with the antipodal
involution.

The initial pair is admissible, so the quotient matrix exists — but a
single orbit mutation already breaks admissibility, and after the orbit
word (2, 1) the projected ambient seed genuinely differs from the seed
obtained by mutating inside the quotient.  Folding and orbit mutation
do not commute for unstable pairs.

Run:  python3 demos/unstable_six_cycle.py
"""

from clusterfold import catalog
from clusterfold.folding import (
    admissibility_witness,
    check_stability,
    compose_orbit_mutations,
    verify_commutation,
)


def main():
    pair = catalog.folding_pair("remark-stabilite").pair
    print("orbits:", pair.orbits)
    print("admissible before any mutation:", pair.admissible)

    verdict = check_stability(pair)
    print("stability verdict:", verdict.status)
    print("shortest unstable orbit word:", verdict.witness_word)
    print("directed-path witness (vertices):", verdict.witness_path)

    mutated = compose_orbit_mutations(pair.matrix, pair.orbits, 1)
    print("\nafter mutating orbit 1, the admissibility witness is",
          admissibility_witness(mutated, pair.orbits))

    report = verify_commutation(pair, (1, 0), require_stable=False)
    print("\ncommutation along the orbit word (1, 0):", "ok" if report.ok else "MISMATCH")
    print("quotient-side cluster:")
    for x in report.quotient_side.cluster:
        print("   ", x.render())
    print("projected ambient cluster:")
    for x in report.projected_side.cluster:
        print("   ", x.render())


if __name__ == "__main__":
    main()
