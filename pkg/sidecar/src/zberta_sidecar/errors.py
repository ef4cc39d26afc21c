"""Exception hierarchy for the sidecar."""


class SidecarError(Exception):
    """Base class for sidecar failures."""


class SidecarConfigError(SidecarError):
    """Invalid or missing configuration."""


class ModelLoadError(SidecarError):
    """A model identifier could not be resolved into a usable backend."""


class InferenceError(SidecarError):
    """A loaded model produced output the protocols cannot carry."""
