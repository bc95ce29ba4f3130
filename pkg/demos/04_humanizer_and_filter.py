"""Human acceleration events, and recovering them from trajectories.

The humanizer injects occasional hard accelerations or brakings, drawn
from a histogram of real car-following data, with short events for large
magnitudes. We simulate a humanized ring, export its trajectories and run
them through the car-following filter that produced such histograms.
"""
# %%
import numpy as np

from mixtraffic import EpisodeSchedule, Fleet, RingScenario, run_episode
from mixtraffic.sim import FLAG_HUMAN_EVENT
from mixtraffic.humanizer import load_accel_histogram, sample_events
from mixtraffic.trajfilter import (TrajectoryRecord, build_histogram, detect_periods,
                                   excursion_stats, merge_stats)

model = load_accel_histogram()
mag, dur, gap = sample_events(model, np.random.default_rng(0), 5)
for m, d, g in zip(mag, dur, gap):
    print(f"event {m:+.2f} m/s2 for {d:4.1f} s, next one after {g:4.1f} s")

# %%
sched = EpisodeSchedule(horizon_steps=4000, humanizer_enabled=True, measurement_window=120)
trace = run_episode(RingScenario.from_density(70), Fleet(), sched, seed=4)
in_event = (trace["event_flags"] & FLAG_HUMAN_EVENT) > 0
print(f"vehicle-steps spent inside a humanizer event: {in_event.mean():.1%}")

# %% [markdown]
# Unwrapped positions make the ring look like a long straight road; leaders
# are resolved from positions, so the frontmost car simply has none.

# %%
ids = np.unique(trace["vehicle_id"])
x = trace.matrix("odometer", ids)
v = trace.matrix("velocity_mps", ids)
t = trace.times()
keep = t >= 280.0
records = [TrajectoryRecord(float(t[k]), int(vid), 0, float(x[k, j]), float(v[k, j]))
           for j, vid in enumerate(ids) for k in np.flatnonzero(keep)]
periods = detect_periods(records, speed_limit=20.0)
print(f"{len(periods)} car-following periods, "
      f"{sum(p.duration for p in periods):.0f} s in total")

acc = np.concatenate([p.accelerations for p in periods])
stats = merge_stats([excursion_stats(p.accelerations, p.times) for p in periods])
hist = build_histogram(acc, 0.5, stats)
print(f"share of samples within +-1 m/s2: {np.mean(np.abs(acc) <= 1.0):.2f}")
print(f"{len(stats.durations)} excursions outside the band, "
      f"median length {np.median(stats.durations):.1f} s")
for (lo, hi), m in zip(hist.bins, hist.masses):
    if m >= 0.01:
        print(f"  [{lo:+.1f}, {hi:+.1f})  {m:.3f}  {'#' * int(round(100 * m))}")
