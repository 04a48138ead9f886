#pragma once

#include <array>
#include <string_view>

namespace scmine::data {

// Lexicon of common English verb forms and adjectives used by the
// nouns-only token filter. Tokens found here are treated as non-nouns.
inline constexpr std::array<std::string_view, 1853> kNonNounLexicon = {{
    "able", "accept", "accepted", "accepting", "accepts", "access", "accessed",
    "accesses", "accessing", "achieve", "achieved", "achieves", "achieving", "acquire",
    "acquired", "acquires", "acquiring", "activate", "activated", "activates", "activating",
    "active", "actual", "adapt", "adapted", "adapting", "adapts", "add",
    "added", "adding", "additional", "adds", "adjust", "adjusted", "adjusting",
    "adjusts", "admit", "admited", "admiting", "admits", "admitted", "admitting",
    "adopt", "adopted", "adopting", "adopts", "advanced", "advise", "advised",
    "advises", "advising", "agree", "agreed", "agrees", "agreing", "allow",
    "allowed", "allowing", "allows", "analyze", "analyzed", "analyzes", "analyzing",
    "annotate", "annotated", "annotates", "annotating", "announce", "announced", "announces",
    "announcing", "append", "appended", "appending", "appends", "applied", "applies",
    "apply", "applying", "appoint", "appointed", "appointing", "appoints", "appropriate",
    "approve", "approved", "approves", "approving", "argue", "argued", "argues",
    "arguing", "arrange", "arranged", "arranges", "arranging", "arrive", "arrived",
    "arrives", "arriving", "ask", "asked", "asking", "asks", "assign",
    "assigned", "assigning", "assigns", "assume", "assumed", "assumes", "assuming",
    "assure", "assured", "assures", "assuring", "attach", "attached", "attaches",
    "attaching", "attempt", "attempted", "attempting", "attempts", "attend", "attended",
    "attending", "attends", "automatic", "available", "avoid", "avoided", "avoiding",
    "avoids", "bad", "basic", "became", "become", "becomed", "becomes",
    "becoming", "began", "begin", "begined", "begining", "beginned", "beginning",
    "begins", "begun", "behave", "behaved", "behaves", "behaving", "believe",
    "believed", "believes", "believing", "belong", "belonged", "belonging", "belongs",
    "best", "better", "big", "biggest", "bind", "binded", "binding",
    "binds", "boolean", "borrow", "borrowed", "borrowing", "borrows", "bought",
    "bound", "break", "breaked", "breaking", "breaks", "bring", "bringed",
    "bringing", "brings", "broke", "broken", "brought", "build", "builded",
    "building", "builds", "built", "busy", "buy", "buyed", "buying",
    "buys", "calculate", "calculated", "calculates", "calculating", "came", "cancel",
    "canceled", "canceling", "cancels", "capable", "capture", "captured", "captures",
    "capturing", "careful", "carried", "carries", "carry", "carrying", "catch",
    "catched", "catches", "catching", "caught", "cause", "caused", "causes",
    "causing", "certain", "change", "changed", "changes", "changing", "charge",
    "charged", "charges", "charging", "cheap", "choose", "choosed", "chooses",
    "choosing", "chose", "chosen", "clarified", "clarifies", "clarify", "clarifying",
    "clean", "cleaned", "cleaning", "cleans", "clear", "cleared", "clearing",
    "clears", "click", "clicked", "clicking", "clicks", "close", "closed",
    "closes", "closing", "collect", "collected", "collecting", "collects", "combine",
    "combined", "combines", "combining", "come", "comed", "comes", "coming",
    "common", "communicate", "communicated", "communicates", "communicating", "compare", "compared",
    "compares", "comparing", "compatible", "compile", "compiled", "compiles", "compiling",
    "complete", "completed", "completes", "completing", "complex", "compute", "computed",
    "computes", "computing", "concatenate", "concatenated", "concatenates", "concatenating", "configure",
    "configured", "configures", "configuring", "confirm", "confirmed", "confirming", "confirms",
    "connect", "connected", "connecting", "connects", "consider", "considered", "considering",
    "considers", "consist", "consisted", "consisting", "consists", "construct", "constructed",
    "constructing", "constructs", "consume", "consumed", "consumes", "consuming", "contain",
    "contained", "containing", "contains", "continue", "continued", "continues", "continuing",
    "contribute", "contributed", "contributes", "contributing", "convenient", "convert", "converted",
    "converting", "converts", "cool", "copied", "copies", "copy", "copying",
    "correct", "corrected", "correcting", "corrects", "cost", "costed", "costing",
    "costs", "cover", "covered", "covering", "coverred", "coverring", "covers",
    "crash", "crashed", "crashes", "crashing", "create", "created", "creates",
    "creating", "current", "custom", "customize", "customized", "customizes", "customizing",
    "cut", "cuted", "cuting", "cuts", "cutted", "cutting", "deal",
    "dealed", "dealing", "deals", "dealt", "debug", "debuged", "debugged",
    "debugging", "debuging", "debugs", "decide", "decided", "decides", "deciding",
    "declare", "declared", "declares", "declaring", "decode", "decoded", "decodes",
    "decoding", "decrease", "decreased", "decreases", "decreasing", "define", "defined",
    "defines", "defining", "delete", "deleted", "deletes", "deleting", "deliver",
    "delivered", "delivering", "delivers", "demonstrate", "demonstrated", "demonstrates", "demonstrating",
    "denied", "denies", "deny", "denying", "depend", "depended", "depending",
    "depends", "deploy", "deployed", "deploying", "deploys", "describe", "described",
    "describes", "describing", "deserialize", "deserialized", "deserializes", "deserializing", "design",
    "designed", "designing", "designs", "destroy", "destroyed", "destroying", "destroys",
    "detect", "detected", "detecting", "detects", "determine", "determined", "determines",
    "determining", "develop", "developed", "developing", "develops", "differ", "differed",
    "different", "differing", "differs", "difficult", "direct", "disable", "disabled",
    "disables", "disabling", "disconnect", "disconnected", "disconnecting", "disconnects", "discover",
    "discovered", "discovering", "discovers", "discuss", "discussed", "discusses", "discussing",
    "display", "displayed", "displaying", "displays", "divide", "divided", "divides",
    "dividing", "download", "downloaded", "downloading", "downloads", "drag", "draged",
    "dragged", "dragging", "draging", "drags", "draw", "drawed", "drawing",
    "drawn", "draws", "drew", "drop", "droped", "droping", "dropped",
    "dropping", "drops", "duplicate", "duplicated", "duplicates", "duplicating", "dynamic",
    "easier", "easiest", "easy", "edit", "edited", "editing", "edits",
    "editted", "editting", "efficient", "embed", "embedded", "embedding", "embeded",
    "embeding", "embeds", "emphasize", "emphasized", "emphasizes", "emphasizing", "empty",
    "enable", "enabled", "enables", "enabling", "encode", "encoded", "encodes",
    "encoding", "encounter", "encountered", "encountering", "encounters", "encourage", "encouraged",
    "encourages", "encouraging", "enforce", "enforced", "enforces", "enforcing", "enhance",
    "enhanced", "enhances", "enhancing", "enjoy", "enjoyed", "enjoying", "enjoys",
    "ensure", "ensured", "ensures", "ensuring", "enter", "entered", "entering",
    "enterred", "enterring", "enters", "entire", "equal", "essential", "establish",
    "established", "establishes", "establishing", "evaluate", "evaluated", "evaluates", "evaluating",
    "exact", "examine", "examined", "examines", "examining", "exceed", "exceeded",
    "exceeding", "exceeds", "excellent", "exclude", "excluded", "excludes", "excluding",
    "execute", "executed", "executes", "executing", "exist", "existed", "existing",
    "exists", "expand", "expanded", "expanding", "expands", "expect", "expected",
    "expecting", "expects", "explain", "explained", "explaining", "explains", "explore",
    "explored", "explores", "exploring", "export", "exported", "exporting", "exports",
    "express", "expressed", "expresses", "expressing", "extend", "extended", "extending",
    "extends", "external", "extra", "extract", "extracted", "extracting", "extracts",
    "fail", "failed", "failing", "fails", "familiar", "famous", "fast",
    "fetch", "fetched", "fetches", "fetching", "fill", "filled", "filling",
    "fills", "final", "find", "finded", "finding", "finds", "fine",
    "finish", "finished", "finishes", "finishing", "fix", "fixed", "fixes",
    "fixing", "flexible", "follow", "followed", "following", "follows", "forget",
    "forgeted", "forgeting", "forgets", "forgetting", "forgot", "forgotten", "format",
    "formated", "formating", "formats", "forward", "forwarded", "forwarding", "forwards",
    "found", "free", "frequent", "fresh", "full", "functional", "gain",
    "gained", "gaining", "gains", "gave", "general", "generate", "generated",
    "generates", "generating", "generic", "get", "geted", "geting", "gets",
    "getted", "getting", "give", "gived", "given", "gives", "giving",
    "global", "go", "goed", "goes", "goesed", "goeses", "goesing",
    "going", "goinged", "goinging", "goings", "gone", "goned", "gones",
    "goning", "good", "gos", "got", "gotten", "grab", "grabbed",
    "grabbing", "grabed", "grabing", "grabs", "great", "grew", "grow",
    "growed", "growing", "grown", "grows", "handle", "handled", "handles",
    "handling", "happen", "happened", "happening", "happens", "happy", "hard",
    "heavy", "held", "helpful", "hid", "hidden", "hide", "hided",
    "hides", "hiding", "high", "highlight", "highlighted", "highlighting", "highlights",
    "hold", "holded", "holding", "holds", "hope", "hoped", "hopes",
    "hoping", "huge", "ignore", "ignored", "ignores", "ignoring", "illustrate",
    "illustrated", "illustrates", "illustrating", "imagine", "imagined", "imagines", "imagining",
    "implement", "implemented", "implementing", "implements", "import", "important", "imported",
    "importing", "imports", "impossible", "improve", "improved", "improves", "improving",
    "include", "included", "includes", "including", "incorrect", "increase", "increased",
    "increases", "increasing", "independent", "indicate", "indicated", "indicates", "indicating",
    "individual", "inherit", "inherited", "inheriting", "inherits", "initial", "initialize",
    "initialized", "initializes", "initializing", "inject", "injected", "injecting", "injects",
    "insert", "inserted", "inserting", "inserts", "install", "installed", "installing",
    "installs", "instantiate", "instantiated", "instantiates", "instantiating", "integrate", "integrated",
    "integrates", "integrating", "intend", "intended", "intending", "intends", "interact",
    "interacted", "interacting", "interacts", "interesting", "internal", "introduce", "introduced",
    "introduces", "introducing", "invalid", "invoke", "invoked", "invokes", "invoking",
    "involve", "involved", "involves", "involving", "iterate", "iterated", "iterates",
    "iterating", "join", "joined", "joining", "joins", "jump", "jumped",
    "jumping", "jumps", "keep", "keeped", "keeping", "keeps", "kept",
    "knew", "know", "knowed", "knowing", "known", "knows", "large",
    "larger", "largest", "last", "late", "latest", "launch", "launched",
    "launches", "launching", "lazy", "lead", "leaded", "leading", "leads",
    "learn", "learned", "learning", "learns", "learnt", "leave", "leaved",
    "leaves", "leaving", "led", "left", "lend", "lended", "lending",
    "lends", "lent", "let", "leted", "leting", "lets", "letted",
    "letting", "light", "little", "load", "loaded", "loading", "loads",
    "local", "locate", "located", "locates", "locating", "lock", "locked",
    "locking", "locks", "log", "loged", "logged", "logging", "loging",
    "logs", "long", "look", "looked", "looking", "looks", "lose",
    "losed", "loses", "losing", "lost", "low", "lower", "made",
    "main", "maintain", "maintained", "maintaining", "maintains", "major", "make",
    "maked", "makes", "making", "manage", "managed", "manages", "managing",
    "manipulate", "manipulated", "manipulates", "manipulating", "manual", "many", "mark",
    "marked", "marking", "marks", "match", "matched", "matches", "matching",
    "maximum", "mean", "meaned", "meaning", "means", "meant", "measure",
    "measured", "measures", "measuring", "meet", "meeted", "meeting", "meets",
    "mention", "mentioned", "mentioning", "mentions", "merge", "merged", "merges",
    "merging", "met", "migrate", "migrated", "migrates", "migrating", "minimal",
    "minimize", "minimized", "minimizes", "minimizing", "minimum", "missing", "modern",
    "modified", "modifies", "modify", "modifying", "move", "moved", "moves",
    "moving", "multiple", "mutable", "narrow", "native", "navigate", "navigated",
    "navigates", "navigating", "necessary", "need", "needed", "needing", "needs",
    "nested", "new", "nice", "normal", "notice", "noticed", "notices",
    "noticing", "notified", "notifies", "notify", "notifying", "numeric", "obtain",
    "obtained", "obtaining", "obtains", "obvious", "occur", "occured", "occuring",
    "occurred", "occurring", "occurs", "offer", "offered", "offering", "offerred",
    "offerring", "offers", "old", "open", "opened", "opening", "openned",
    "openning", "opens", "operate", "operated", "operates", "operating", "optimize",
    "optimized", "optimizes", "optimizing", "optional", "organize", "organized", "organizes",
    "organizing", "original", "override", "overrided", "overrides", "overriding", "overwrite",
    "overwrited", "overwrites", "overwriting", "parallel", "parse", "parsed", "parses",
    "parsing", "particular", "pass", "passed", "passes", "passing", "paste",
    "pasted", "pastes", "pasting", "pause", "paused", "pauses", "pausing",
    "perfect", "perform", "performed", "performing", "performs", "persist", "persisted",
    "persistent", "persisting", "persists", "pick", "picked", "picking", "picks",
    "place", "placed", "places", "placing", "plan", "planed", "planing",
    "planned", "planning", "plans", "play", "played", "playing", "plays",
    "point", "pointed", "pointing", "points", "popular", "populate", "populated",
    "populates", "populating", "possible", "powerful", "practical", "prefer", "prefered",
    "prefering", "prefers", "prepare", "prepared", "prepares", "preparing", "present",
    "presented", "presenting", "presents", "press", "pressed", "presses", "pressing",
    "prevent", "prevented", "preventing", "prevents", "previous", "primary", "print",
    "printed", "printing", "prints", "private", "proceed", "proceeded", "proceeding",
    "proceeds", "process", "processed", "processes", "processing", "produce", "produced",
    "produces", "producing", "promise", "promised", "promises", "promising", "prompt",
    "prompted", "prompting", "prompts", "proper", "propose", "proposed", "proposes",
    "proposing", "protect", "protected", "protecting", "protects", "prove", "proved",
    "proves", "provide", "provided", "provides", "providing", "proving", "public",
    "publish", "published", "publishes", "publishing", "pull", "pulled", "pulling",
    "pulls", "push", "pushed", "pushes", "pushing", "put", "puted",
    "puting", "puts", "putted", "putting", "queried", "queries", "query",
    "querying", "quick", "quit", "quited", "quiting", "quits", "quitting",
    "raise", "raised", "raises", "raising", "ran", "raned", "raning",
    "ranned", "ranning", "rans", "rare", "raw", "reach", "reached",
    "reaches", "reaching", "read", "readed", "reading", "reads", "ready",
    "realize", "realized", "realizes", "realizing", "receive", "received", "receives",
    "receiving", "recent", "recognize", "recognized", "recognizes", "recognizing", "recommend",
    "recommended", "recommending", "recommends", "recursive", "reduce", "reduced", "reduces",
    "reducing", "refactor", "refactored", "refactoring", "refactors", "refer", "refered",
    "refering", "referred", "referring", "refers", "refresh", "refreshed", "refreshes",
    "refreshing", "register", "registered", "registering", "registers", "regular", "reject",
    "rejected", "rejecting", "rejects", "relate", "related", "relates", "relating",
    "release", "released", "releases", "releasing", "relevant", "reliable", "reload",
    "reloaded", "reloading", "reloads", "remain", "remained", "remaining", "remains",
    "remember", "remembered", "remembering", "remembers", "remote", "remove", "removed",
    "removes", "removing", "rename", "renamed", "renames", "renaming", "render",
    "rendered", "rendering", "renders", "repeat", "repeated", "repeating", "repeats",
    "replace", "replaced", "replaces", "replacing", "represent", "represented", "representing",
    "represents", "request", "requested", "requesting", "requests", "require", "required",
    "requires", "requiring", "resize", "resized", "resizes", "resizing", "resolve",
    "resolved", "resolves", "resolving", "respond", "responded", "responding", "responds",
    "responsible", "restart", "restarted", "restarting", "restarts", "restore", "restored",
    "restores", "restoring", "retried", "retries", "retrieve", "retrieved", "retrieves",
    "retrieving", "retry", "retrying", "return", "returned", "returning", "returns",
    "reuse", "reused", "reuses", "reusing", "reverse", "reversed", "reverses",
    "reversing", "revert", "reverted", "reverting", "reverts", "review", "reviewed",
    "reviewing", "reviews", "rewrite", "rewrited", "rewrites", "rewriting", "rich",
    "robust", "rotate", "rotated", "rotates", "rotating", "run", "runed",
    "runing", "runned", "running", "runs", "safe", "said", "save",
    "saved", "saves", "saving", "saw", "say", "sayed", "saying",
    "says", "scroll", "scrolled", "scrolling", "scrolls", "search", "searched",
    "searches", "searching", "secure", "see", "seed", "seeing", "seem",
    "seemed", "seeming", "seems", "seen", "sees", "seing", "select",
    "selected", "selecting", "selects", "sell", "selled", "selling", "sells",
    "send", "sended", "sending", "sends", "sent", "separate", "separated",
    "separates", "separating", "serialize", "serialized", "serializes", "serializing", "serious",
    "serve", "served", "serves", "serving", "set", "seted", "seting",
    "sets", "setted", "setting", "share", "shared", "shares", "sharing",
    "short", "show", "showed", "showing", "shows", "shut", "shuted",
    "shuting", "shuts", "shutted", "shutting", "similar", "simple", "simplified",
    "simplifies", "simplify", "simplifying", "simulate", "simulated", "simulates", "simulating",
    "single", "slow", "small", "smaller", "smallest", "sold", "solve",
    "solved", "solves", "solving", "sort", "sorted", "sorting", "sorts",
    "speak", "speaked", "speaking", "speaks", "special", "specific", "specified",
    "specifies", "specify", "specifying", "spend", "spended", "spending", "spends",
    "spent", "split", "splited", "spliting", "splits", "splitted", "splitting",
    "spoke", "spoken", "stable", "standard", "start", "started", "starting",
    "starts", "static", "stop", "stoped", "stoping", "stopped", "stopping",
    "stops", "store", "stored", "stores", "storing", "strong", "subclass",
    "subclassed", "subclasses", "subclassing", "submit", "submited", "submiting", "submits",
    "subscribe", "subscribed", "subscribes", "subscribing", "succeed", "succeeded", "succeeding",
    "succeeds", "successful", "sufficient", "suggest", "suggested", "suggesting", "suggests",
    "suitable", "supplied", "supplies", "supply", "supplying", "support", "supported",
    "supporting", "supports", "suppose", "supposed", "supposes", "supposing", "sure",
    "suspend", "suspended", "suspending", "suspends", "switch", "switched", "switches",
    "switching", "synchronize", "synchronized", "synchronizes", "synchronizing", "take", "taked",
    "taken", "takes", "taking", "talk", "talked", "talking", "talks",
    "taught", "teach", "teached", "teaches", "teaching", "tell", "telled",
    "telling", "tells", "temporary", "terminate", "terminated", "terminates", "terminating",
    "think", "thinked", "thinking", "thinks", "thought", "threw", "throw",
    "throwed", "throwing", "thrown", "throws", "tiny", "toggle", "toggled",
    "toggles", "toggling", "told", "took", "total", "track", "tracked",
    "tracking", "tracks", "transfer", "transfered", "transfering", "transfers", "transform",
    "transformed", "transforming", "transforms", "translate", "translated", "translates", "translating",
    "transparent", "traverse", "traversed", "traverses", "traversing", "tried", "tries",
    "trigger", "triggered", "triggering", "triggers", "trim", "trimed", "triming",
    "trimmed", "trimming", "trims", "truncate", "truncated", "truncates", "truncating",
    "try", "trying", "typical", "unable", "understand", "understanded", "understanding",
    "understands", "understood", "undo", "undoed", "undoing", "undos", "uninstall",
    "uninstalled", "uninstalling", "uninstalls", "unique", "universal", "unlock", "unlocked",
    "unlocking", "unlocks", "unnecessary", "unsubscribe", "unsubscribed", "unsubscribes", "unsubscribing",
    "unusual", "unzip", "unziped", "unziping", "unzipped", "unzipping", "unzips",
    "update", "updated", "updates", "updating", "upgrade", "upgraded", "upgrades",
    "upgrading", "upload", "uploaded", "uploading", "uploads", "use", "used",
    "useful", "useless", "uses", "using", "usual", "valid", "validate",
    "validated", "validates", "validating", "various", "verified", "verifies", "verify",
    "verifying", "virtual", "visible", "visit", "visited", "visiting", "visits",
    "visitted", "visitting", "wait", "waited", "waiting", "waits", "walk",
    "walked", "walking", "walks", "want", "wanted", "wanting", "wants",
    "warn", "warned", "warning", "warns", "watch", "watched", "watches",
    "watching", "went", "wented", "wenting", "wents", "whole", "wide",
    "wonder", "wondered", "wondering", "wonders", "work", "worked", "working",
    "works", "wrap", "wraped", "wraping", "wrapped", "wrapping", "wraps",
    "write", "writed", "writes", "writing", "written", "wrong", "wrote",
    "young", "zoom", "zoomed", "zooming", "zooms",
}};

// Nouns ending in "ing" that the suffix heuristic must not drop.
inline constexpr std::array<std::string_view, 18> kIngNounWhitelist = {{
    "anything", "building", "buildings", "ceiling", "evening", "everything",
    "feeling", "king", "listing", "morning", "nothing", "ring", "setting",
    "settings", "something", "spring", "string", "strings",
}};

} // namespace scmine::data
