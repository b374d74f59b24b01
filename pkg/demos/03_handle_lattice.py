"""The lattice of prime-localized subdomains.

Decorating the critical handles of a standard presentation with a prime
set P carves one torsion disk per prime; the resulting subdomain's
category is the P-localization.  Subdomains embed exactly along reverse
inclusion of prime sets, with flexibilization (0 in P) at the bottom.
"""

from locweinstein import (HandlePresentation, PrimeSet, classify_presentation,
                          embeddable, embedding_witness, lattice_chain,
                          replace_handles)

std = HandlePresentation.standard("X", 2)
for label in ("", "2", "2,3", "0"):
    P = PrimeSet.parse(label)
    cls = classify_presentation(replace_handles(std, P))
    print(f"P = {label or 'empty':5} -> {cls}")

print("\nchain 2 | 2,3 | 2,3,5:",
      [ps.to_json_list() for ps in lattice_chain([2, 3, 5])])

pairs = [("2,3", "2"), ("2", "3"), ("0", "7,13")]
for p_text, q_text in pairs:
    P, Q = PrimeSet.parse(p_text), PrimeSet.parse(q_text)
    ok = embeddable(P, Q)
    line = f"W_{{{q_text}}} embeds in W_{{{p_text}}}: {ok}"
    if not ok:
        line += f"  (obstruction prime {embedding_witness(P, Q)})"
    print(line)
