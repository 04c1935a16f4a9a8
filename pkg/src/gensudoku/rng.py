"""Portable seeded generator (xorshift64*, seeded through splitmix64).

Every random choice in the package goes through this class so that a given
seed produces bit-identical output on every platform.  The exact update
equations are documented in README.md; do not change them without treating
it as a breaking change of the scramble/mask output.
"""

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    z = (x + 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        if not 0 <= seed <= MASK64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
        # xorshift state must never be zero
        self.state = splitmix64(seed) or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & MASK64

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection sampling (no modulo bias)."""
        if k <= 0:
            raise ValueError("k must be positive")
        threshold = (1 << 64) % k
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % k

    def permutation(self, k: int) -> list[int]:
        items = list(range(k))
        self.shuffle(items)
        return items

    def shuffle(self, items: list) -> list:
        """Fisher-Yates, high index down to 1."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items
