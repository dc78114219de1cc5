#pragma once

#include "branchkit/branching.hpp"
#include "branchkit/errors.hpp"
#include "branchkit/fundamental.hpp"
#include "branchkit/multiplicities.hpp"
#include "branchkit/oracle.hpp"
#include "branchkit/pieri.hpp"
#include "branchkit/qcomb.hpp"
#include "branchkit/report.hpp"
#include "branchkit/subalgebra.hpp"
#include "branchkit/weights.hpp"
