from opcalc.model.endop import Lcg64


def draw_operations(seed, dim, degrees):
    rng = Lcg64(seed)
    return [rng.operation(dim, degree, 3) for degree in degrees]


def draw_degrees(seed, count, max_degree):
    rng = Lcg64(seed + 7919)
    return [rng.draw_between(1, max_degree) for _ in range(count)]
