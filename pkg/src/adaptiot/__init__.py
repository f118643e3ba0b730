"""Self-adaptive IoT kernel.

A MAPE-K feedback-control runtime (monitor / analyze / plan / execute over a
shared knowledge base) distributed master-slave across a simulated
gateway/backend network of virtual devices, together with a staged XML model
toolchain that turns platform-independent system descriptions into runnable
simulation scenarios.
"""

__version__ = "0.1.0"
