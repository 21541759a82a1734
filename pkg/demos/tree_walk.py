#!/usr/bin/env python3
"""Walk the state tree: apply a code step by step, reflect it, list small states."""

from fibtree import enumerate_states, evaluate, reflect, trace, value

code = "1011"
print(f"code {code} applied left to right from (1, 2, 3):")
for step, state in enumerate(trace(code)):
    print(f"  step {step}: {state}")
print(f"value F[{code}] = {value(code)}")
print()

reflected = reflect(code)
print(f"reflection {code} -> {reflected}")
print(f"F[{code}] = {value(code)}, F[{reflected}] = {value(reflected)}")
print("the states differ, the values agree:")
print(f"  S[{code}] = {evaluate(code)}")
print(f"  S[{reflected}] = {evaluate(reflected)}")
print()

print("every reachable state with third entry <= 13:")
for state, path in enumerate_states(13):
    label = path if path else "(root)"
    print(f"  {state}  via {label}")
