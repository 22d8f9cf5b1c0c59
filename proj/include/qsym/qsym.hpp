#pragma once

#include "qsym/coaction.hpp"
#include "qsym/cstar.hpp"
#include "qsym/exprparse.hpp"
#include "qsym/graph.hpp"
#include "qsym/linalg.hpp"
#include "qsym/ncpoly.hpp"
#include "qsym/pathspace.hpp"
#include "qsym/presentation.hpp"
#include "qsym/presentations.hpp"
#include "qsym/prove.hpp"
#include "qsym/qmatrix.hpp"
#include "qsym/rational.hpp"
#include "qsym/rep.hpp"
#include "qsym/rep_families.hpp"
#include "qsym/rewrite.hpp"
#include "qsym/word.hpp"
