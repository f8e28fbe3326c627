#ifndef GEV_GEV_HPP
#define GEV_GEV_HPP

// Group-characterizable entropy vectors, the Ingleton inequality, and the
// class-2 abelian counterpart construction, over finite groups given as
// dense multiplication tables.

#include "gev/bitset.hpp"
#include "gev/cli.hpp"
#include "gev/entropy.hpp"
#include "gev/error.hpp"
#include "gev/exact.hpp"
#include "gev/group.hpp"
#include "gev/groupspec.hpp"
#include "gev/lazard.hpp"
#include "gev/nilpotent.hpp"
#include "gev/report_io.hpp"
#include "gev/scan.hpp"
#include "gev/subgroups.hpp"

#endif // GEV_GEV_HPP
