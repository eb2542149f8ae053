#pragma once

#include <stdexcept>
#include <string>

namespace polymap {

// Every failure the library can diagnose.  Codes are stable identifiers:
// they appear in exception messages and drive the CLI exit codes.
enum class errc {
    too_few_vertices,
    duplicate_vertex,
    self_intersecting,
    collinear_triple,
    invalid_polygon,
    index_range,
    not_an_ear,
    no_two_ears,
    coincident_poles,
    at_pole,
    roots_not_converged,
    invalid_partition,
    out_of_disk,
    not_upper_half_plane,
    nonpositive_length,
    index_adjacent,
    not_outside_corner,
    epsilon_exhausted,
    certification_inconsistent,
    bad_input,
    mismatched_inputs,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::too_few_vertices:           return "ERR_TOO_FEW_VERTICES";
        case errc::duplicate_vertex:           return "ERR_DUPLICATE_VERTEX";
        case errc::self_intersecting:          return "ERR_SELF_INTERSECTING";
        case errc::collinear_triple:           return "ERR_COLLINEAR_TRIPLE";
        case errc::invalid_polygon:            return "ERR_INVALID_POLYGON";
        case errc::index_range:                return "ERR_INDEX_RANGE";
        case errc::not_an_ear:                 return "ERR_NOT_AN_EAR";
        case errc::no_two_ears:                return "ERR_NO_TWO_EARS";
        case errc::coincident_poles:           return "ERR_COINCIDENT_POLES";
        case errc::at_pole:                    return "ERR_AT_POLE";
        case errc::roots_not_converged:        return "ERR_ROOTS_NOT_CONVERGED";
        case errc::invalid_partition:          return "ERR_INVALID_PARTITION";
        case errc::out_of_disk:                return "ERR_OUT_OF_DISK";
        case errc::not_upper_half_plane:       return "ERR_NOT_UPPER_HALF_PLANE";
        case errc::nonpositive_length:         return "ERR_NONPOSITIVE_LENGTH";
        case errc::index_adjacent:             return "ERR_INDEX_ADJACENT";
        case errc::not_outside_corner:         return "ERR_NOT_OUTSIDE_CORNER";
        case errc::epsilon_exhausted:          return "ERR_EPSILON_EXHAUSTED";
        case errc::certification_inconsistent: return "ERR_CERTIFICATION_INCONSISTENT";
        case errc::bad_input:                  return "ERR_BAD_INPUT";
        case errc::mismatched_inputs:          return "ERR_MISMATCHED_INPUTS";
    }
    return "ERR_UNKNOWN";
}

class error : public std::runtime_error {
  public:
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

}  // namespace polymap
