"""Exception types shared across the package."""


class VesselTrackError(Exception):
    """Base class for all vesseltrack errors."""


class ValidationError(VesselTrackError, ValueError):
    """Invalid input data, configuration, or arguments."""


class VmapFormatError(ValidationError):
    """A VMAP file violates the on-disk format."""


class OutOfBoundsError(ValidationError):
    """A query point lies outside the map."""


class DegenerateParticlesError(VesselTrackError):
    """Every particle received zero likelihood; the vessel is lost."""


class DegenerateDirectionError(VesselTrackError):
    """Weighted particle directions cancel out; no mean direction exists."""
