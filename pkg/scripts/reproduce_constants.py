"""Print the exact expected reads and distance constants, and check that the
chain and linear system rebuilt from the automaton table agree with them."""

from hanoigasket import analysis


def main():
    for key, value in analysis.exact_constants().items():
        print(f"{key:>3} = {value}")
    same_chain = analysis.derive_decision_chain() == analysis.decision_chain()
    same_system = analysis.derive_distance_system() == analysis.distance_system()
    print(f"chain rebuilt from table matches: {same_chain}")
    print(f"distance system rebuilt from table matches: {same_system}")


if __name__ == "__main__":
    main()
