#include "adele/errors.hpp"

namespace adele {

const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_input: return "InvalidInput";
    case errc::composite_modulus: return "CompositeModulus";
    case errc::non_squarefree: return "NonSquarefree";
    case errc::irreducibility_undecided: return "IrreducibilityUndecided";
    case errc::missing_field_discriminant: return "MissingFieldDiscriminant";
    case errc::precision_unattainable: return "PrecisionUnattainable";
    case errc::undetermined_prime: return "UndeterminedPrime";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::matching_obstruction: return "MatchingObstruction";
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::out_of_matching_range: return "OutOfMatchingRange";
    case errc::class_mismatch: return "ClassMismatch";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::precondition_gcd: return "PreconditionGcd";
    case errc::prime_mismatch: return "PrimeMismatch";
    case errc::odd_quaternionic_rank: return "OddQuaternionicRank";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::missing_zeta: return "MissingZeta";
    case errc::degenerate_group: return "DegenerateGroup";
    case errc::alpha_too_small: return "AlphaTooSmall";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    }
    return "UnknownError";
}

} // namespace adele
