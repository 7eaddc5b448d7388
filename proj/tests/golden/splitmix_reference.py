"""Reference generator for the seed-42 golden instance.

Written independently of the C++ code from the documented procedure:
SplitMix64 stream, per item d size components in {1..B}, arrival in
{0..T-mu}, duration in {1..mu}, bounded draws by rejection sampling.
Run: python3 splitmix_reference.py > random_seed42.csv
"""
from fractions import Fraction

MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK

    def next(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, bound):
        threshold = (1 << 64) % bound
        while True:
            x = self.next()
            if x >= threshold:
                return x % bound

    def between(self, lo, hi):
        return lo + self.below(hi - lo + 1)


def fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def main(d=2, n=5, mu=10, T=100, B=100, seed=42):
    rng = SplitMix64(seed)
    print("id,arrival,departure," + ",".join(f"s{j + 1}" for j in range(d)))
    for i in range(n):
        sizes = [Fraction(rng.between(1, B), B) for _ in range(d)]
        arrival = rng.between(0, T - mu)
        duration = rng.between(1, mu)
        print(",".join([str(i + 1), fmt(arrival), fmt(arrival + duration)] + [fmt(s) for s in sizes]))


if __name__ == "__main__":
    main()
