"""Counter-based random streams keyed by (master seed, stream index)."""

import numpy as np

# Sub-streams of one run
COUPLING_STREAM = 0
BATH_STREAM = 1
OBSERVABLE_STREAM = 2
STREAMS_PER_RUN = 3


def random_stream(seed: int, stream: int = 0) -> np.random.Generator:
    """Philox generator for one (seed, stream) key.
    
    The key fully determines the draws, so streams are reproducible no
    matter which worker consumes them or in which order.
    """
    sequence = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(stream),))
    return np.random.Generator(np.random.Philox(sequence))


def run_streams(seed: int, run_stream: int = 0) -> dict:
    """Independent generators for the couplings, bath and observable of one run."""
    base = run_stream * STREAMS_PER_RUN
    return {
        "couplings": random_stream(seed, base + COUPLING_STREAM),
        "bath": random_stream(seed, base + BATH_STREAM),
        "observable": random_stream(seed, base + OBSERVABLE_STREAM),
    }
