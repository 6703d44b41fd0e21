"""Scores that know which direction means similar."""

from dataclasses import dataclass

SIMILARITY = 'similarity_high_is_similar'
DISTANCE = 'distance_low_is_similar'


@dataclass(frozen=True)
class MethodScore(object):
    value: float
    orientation: str = SIMILARITY

    @property
    def oriented(self):
        """The value with higher always meaning more similar."""
        return -self.value if self.orientation == DISTANCE else self.value
