"""
Place counts of a cover and the splitting of the low degree places of
F_q(x).
"""
from abelzeta.funcfield import (
    count_places,
    enumerate_places,
    rational_place_counts,
    split_place,
)


def places_report(spec, bound, splitting_bound=2, budget=None):
    """Counts the places of a cover up to degree `bound` and lists the
    splitting type of every place of F_q(x) of degree at most
    `splitting_bound`.

    Parameters
    ----------
    spec: CoverSpec
        A validated cover.
    bound: int
        The degree bound B of the counts.
    splitting_bound: int
        The largest degree of the listed places.
    budget: int, optional
        The largest field which may be enumerated.

    Returns
    -------
    dict
        The JSON ready report with keys spec, N, n and places.
    """
    counts = count_places(spec, bound, budget)

    places = [
        {
            "place": str(place),
            "degree": place.degree,
            **split_place(spec, place).to_dict(),
        }
        for place in enumerate_places(spec.base, splitting_bound, budget)
    ]

    return {
        "spec": spec.identifier,
        "N": [str(count) for count in counts],
        "n": [str(count) for count in rational_place_counts(spec.q, bound)],
        "places": places,
    }
