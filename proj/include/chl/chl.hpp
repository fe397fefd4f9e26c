#pragma once

#include "chl/formula.hpp"
#include "chl/syntax.hpp"
#include "chl/algebra.hpp"
#include "chl/algebra_json.hpp"
#include "chl/catalog.hpp"
#include "chl/structure.hpp"
#include "chl/lemma_suite.hpp"
#include "chl/countermodel.hpp"
#include "chl/hilbert.hpp"
#include "chl/sequent.hpp"
#include "chl/rules.hpp"
#include "chl/proof.hpp"
#include "chl/derivations.hpp"
#include "chl/search.hpp"
#include "chl/cut_elimination.hpp"
#include "chl/bridge.hpp"
#include "chl/parallel.hpp"
