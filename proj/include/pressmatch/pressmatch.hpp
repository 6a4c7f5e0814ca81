#pragma once

#include "pressmatch/corpus.hpp"
#include "pressmatch/csv.hpp"
#include "pressmatch/error.hpp"
#include "pressmatch/linkage.hpp"
#include "pressmatch/matching.hpp"
#include "pressmatch/recommend.hpp"
#include "pressmatch/sentiment.hpp"
#include "pressmatch/strings.hpp"
#include "pressmatch/taxonomy.hpp"
#include "pressmatch/textprep.hpp"
#include "pressmatch/utf8.hpp"
#include "pressmatch/vectorspace.hpp"
