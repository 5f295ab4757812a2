from hypothesis import HealthCheck, settings

# Exact rational arithmetic has occasional slow shrink paths; wall-clock
# deadlines would make those flaky without catching real bugs.
settings.register_profile(
    "exact",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")
