#pragma once

#include "vass/ints.hpp"
#include "vass/perm.hpp"
#include "vass/words.hpp"
#include "vass/relators.hpp"
#include "vass/combing.hpp"
#include "vass/intmat.hpp"
#include "vass/ncpoly.hpp"
#include "vass/presentations.hpp"
#include "vass/reduction.hpp"
#include "vass/sphere_pair.hpp"
#include "vass/invariants.hpp"
#include "vass/oracles.hpp"
#include "vass/check_suite.hpp"
