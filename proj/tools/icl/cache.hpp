#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icl/groebner/ideal.hpp"

namespace icl::cli {

/*
 * Groebner bases on disk, one file per ideal, named by a hash of the ring,
 * the order and the generators. A loaded basis is used only when its
 * checksum matches, it passes the S-pair test and every generator reduces
 * to zero by it.
 */
class GbCache {
  public:
    explicit GbCache(std::string dir);

    /* Basis for the order of I's ring, or nullopt (missing, stale, invalid). */
    std::optional<std::vector<Polynomial>> load(const Ideal& I) const;
    void store(const Ideal& I, const std::vector<Polynomial>& basis) const;

    /* Cached when valid, computed and stored otherwise. */
    std::vector<Polynomial> basis(const Ideal& I) const;

  private:
    std::string dir_;
};

} // namespace icl::cli
