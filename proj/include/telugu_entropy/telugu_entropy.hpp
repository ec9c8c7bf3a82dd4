#ifndef TELUGU_ENTROPY_TELUGU_ENTROPY_HPP
#define TELUGU_ENTROPY_TELUGU_ENTROPY_HPP

#include "telugu_entropy/corpus_stats.hpp"
#include "telugu_entropy/entropy.hpp"
#include "telugu_entropy/error.hpp"
#include "telugu_entropy/jumbler.hpp"
#include "telugu_entropy/mapping_table.hpp"
#include "telugu_entropy/syllabifier.hpp"
#include "telugu_entropy/transliterator.hpp"

#endif
