#pragma once

#include "selfsim/numeric.hpp"
#include "selfsim/perm.hpp"
#include "selfsim/word.hpp"
#include "selfsim/tree.hpp"
#include "selfsim/word_problem.hpp"
#include "selfsim/abelian.hpp"
#include "selfsim/schreier_sims.hpp"
#include "selfsim/quotients.hpp"
#include "selfsim/random_words.hpp"
#include "selfsim/verify.hpp"
