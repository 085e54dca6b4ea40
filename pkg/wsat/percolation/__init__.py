from wsat.percolation.certificate import (
    Certificate,
    CertificateStep,
    VerificationResult,
    certificate_from_dict,
    certificate_from_order,
    certificate_to_dict,
    extract_certificate,
    read_certificates,
    verify_certificate,
    write_certificates,
)
from wsat.percolation.closure import (
    ClosureOutcome,
    addable_edges,
    brute_force_is_weakly_saturated,
    closure,
    is_weakly_saturated,
    percolate,
    randomized_closure,
)

__all__ = [
    # Closure
    "ClosureOutcome",
    "closure",
    "percolate",
    "randomized_closure",
    "addable_edges",
    "is_weakly_saturated",
    "brute_force_is_weakly_saturated",
    # Certificates
    "Certificate",
    "CertificateStep",
    "VerificationResult",
    "extract_certificate",
    "verify_certificate",
    "certificate_from_order",
    "certificate_to_dict",
    "certificate_from_dict",
    "write_certificates",
    "read_certificates",
]
