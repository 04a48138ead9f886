#pragma once

#include "scmine/corpus.hpp"
#include "scmine/detect.hpp"
#include "scmine/doclink.hpp"
#include "scmine/errors.hpp"
#include "scmine/frame.hpp"
#include "scmine/html_text.hpp"
#include "scmine/image_io.hpp"
#include "scmine/lda.hpp"
#include "scmine/lsi.hpp"
#include "scmine/preprocess.hpp"
#include "scmine/similarity.hpp"
#include "scmine/term_vector.hpp"
#include "scmine/tfidf.hpp"
#include "scmine/topics.hpp"
