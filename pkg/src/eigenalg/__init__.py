"""eigenalg: exact computational algebra for monads on finite index windows.

Modules:
  exactla   - exact linear algebra over QQ / F_p
  freealg   - free group words, Magnus expansions, Hall sets, primitive parts
  monadcore - index-window monads, ideals, idealizers, eigenmonads, adjunction
  passi     - Passi quotients, polynomial and analyticity ideals
  primgr    - associative/Lie operad monads and the primitivity ideal (free groups)
  primfr    - finite-maps/symmetric-groups monads and primitivity (free modules)
  outerh    - conjugation action, outer ideal identities, bounded H0 certificates
  cli       - the `tool` command: verification suites, tables, reports
"""

__version__ = "0.1.0"
