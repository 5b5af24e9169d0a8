#pragma once

#include "pfaflab/diagrams.hpp"
#include "pfaflab/errors.hpp"
#include "pfaflab/ftable.hpp"
#include "pfaflab/immanants.hpp"
#include "pfaflab/linalg.hpp"
#include "pfaflab/networks.hpp"
#include "pfaflab/parallel.hpp"
#include "pfaflab/pfaffian.hpp"
#include "pfaflab/pfaffinants.hpp"
#include "pfaflab/poly.hpp"
#include "pfaflab/report.hpp"
#include "pfaflab/schur_q.hpp"
#include "pfaflab/tables.hpp"
#include "pfaflab/tangle.hpp"
#include "pfaflab/theorems.hpp"
#include "pfaflab/uncross.hpp"
