#pragma once

#include "clanlab/clan.hpp"
#include "clanlab/delannoy_paths.hpp"
#include "clanlab/enumeration.hpp"
#include "clanlab/errors.hpp"
#include "clanlab/exact_matrix.hpp"
#include "clanlab/geometry.hpp"
#include "clanlab/partial_involutions.hpp"
#include "clanlab/posets.hpp"
#include "clanlab/qsqrt2.hpp"
#include "clanlab/rational.hpp"
#include "clanlab/restricted_involutions.hpp"
#include "clanlab/series.hpp"
