from hypothesis import HealthCheck, settings

# Keep the whole suite fast; the properties here are cheap and uniform, so
# a few dozen examples each is plenty.
settings.register_profile(
    "suite",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")
