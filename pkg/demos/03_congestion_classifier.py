"""Rule labels and a forecast network for the 50 m zone ahead of a vehicle.

The rule labeller looks at the spacings in the zone: steadily growing
spacings mean a jam is dissolving (Leaving), shrinking ones mean it is
building (Forming), otherwise all-large is FreeFlow and all-small is
Congested. The network learns to predict that label one second ahead.

This demo trains on a reduced dataset so it finishes in under a minute;
``mixtraffic train-csc`` uses the full one.
"""
# %%
import numpy as np

from mixtraffic import csc

for gaps in ((4, 7, 11), (12, 8, 5), (20, 18, 22), (6, 9, 4), (6, 20, 4)):
    snap = csc.SensingZoneSnapshot([(p, 0.0) for p in np.cumsum(gaps)], 100.0)
    print(f"spacings {gaps}: {csc.label_window(snap).label}")

# %%
traces = csc.generate_ring_traces(densities=(70, 90, 110, 130, 150), seeds=(0, 1, 2, 3))
ds = csc.make_dataset(traces, observers=list(range(0, 22, 2)))
train, test = ds.split_by_episode(0.2, seed=0)
print("balanced class counts:", dict(zip([s.label for s in csc.CongestionStage],
                                         ds.class_counts().tolist())))

model = csc.MlpClassifier(seed=0)
res = csc.mlp_train(model, train.X, train.y, epochs=100, lr=0.03, seed=0,
                    X_test=test.X, y_test=test.y)
print(f"loss {res.losses[0]:.3f} -> {res.losses[-1]:.3f}, "
      f"train accuracy {res.train_accuracy:.3f}, held-out accuracy {res.test_accuracy:.3f}")

# %% [markdown]
# Confusion counts on the held-out episodes (rows: true label).

# %%
pred = model.predict(test.X)
labels = [s.label for s in csc.CongestionStage]
print(" " * 10 + "".join(f"{s[:9]:>10s}" for s in labels))
for k, name in enumerate(labels):
    row = np.bincount(pred[test.y == k], minlength=len(labels))
    print(f"{name:10s}" + "".join(f"{n:10d}" for n in row))
