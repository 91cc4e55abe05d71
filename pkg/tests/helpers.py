from fractions import Fraction


def random_poly(alg, rng, max_terms=4, max_len=3):
    terms = {}
    for _ in range(rng.randrange(max_terms + 1)):
        w = tuple(rng.choice(alg.generators) for _ in range(rng.randrange(max_len + 1)))
        terms[w] = terms.get(w, 0) + Fraction(rng.randrange(-5, 6))
    return alg.poly(terms)
