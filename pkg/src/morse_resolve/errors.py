class GuardError(RuntimeError):
    """A size guard was exceeded; ``guard`` names the limit that tripped."""

    def __init__(self, guard: str, value: int, limit: int):
        self.guard = guard
        self.value = value
        self.limit = limit
        super().__init__(f"guard {guard} exceeded: {value} > {limit}")


def check_guard(guard: str, value: int, limit: int):
    if value > limit:
        raise GuardError(guard, value, limit)
