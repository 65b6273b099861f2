#pragma once

#include "rsspredict/entropy.hpp"
#include "rsspredict/error.hpp"
#include "rsspredict/ingest.hpp"
#include "rsspredict/pipeline.hpp"
#include "rsspredict/predictability.hpp"
#include "rsspredict/quantize.hpp"
#include "rsspredict/report.hpp"
#include "rsspredict/serialize.hpp"
#include "rsspredict/synth.hpp"
#include "rsspredict/trace.hpp"
#include "rsspredict/version.hpp"
