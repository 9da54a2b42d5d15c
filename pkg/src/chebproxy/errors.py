"""Exception types shared across the package."""


class ChebproxyError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ChebproxyError, ValueError):
    """An evaluation point lies outside a proxy's domain."""


class NonFiniteValueError(ChebproxyError, ValueError):
    """A target function returned NaN or infinity at an anchor point."""


class IncompatibleProxyError(ChebproxyError, ValueError):
    """Proxies passed to a compression do not share a mesh exactly."""


class OracleOnlyOperationError(ChebproxyError, ValueError):
    """A cross-check oracle was requested outside its supported range."""


class ProxyIdMismatchError(ChebproxyError, ValueError):
    """An anchor response names a different proxy than the request."""


class NodeCountMismatchError(ChebproxyError, ValueError):
    """An anchor response does not carry one value per requested node."""


class ArchiveError(ChebproxyError, ValueError):
    """Base class for proxy-archive read failures."""


class CorruptArchiveError(ArchiveError):
    """An archive file does not follow the documented grammar."""


class UnsupportedVersionError(ArchiveError):
    """An archive declares a format version this build cannot read."""


class DegeneratePnLError(ChebproxyError, ValueError):
    """A PnL vector has zero variance, so no correlation is defined."""
