use clap::{Args, Parser, Subcommand, ValueEnum};
use hookmonoid::{DifferenceSequence, HookType, IndexSet, Partition};

/// Exact partition arithmetic through central hooks.
#[derive(Debug, Parser)]
#[command(name = "hookmonoid", version, about)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count partitions.
    #[command(subcommand)]
    Count(CountCommand),
    /// Hook factorization, hook type and difference sequence of a partition.
    Factor {
        /// Parts separated by commas, e.g. 4,4,2,1.
        partition: Partition,
    },
    /// Product of two partitions.
    Product { left: Partition, right: Partition },
    /// Translate a class index between hook types, difference sequences and
    /// bounded partitions.
    Convert {
        /// Comma separated values, e.g. 7,4,2.
        value: String,
        #[arg(long)]
        from: IndexSet,
        #[arg(long)]
        to: IndexSet,
        /// Weight of the class.
        #[arg(long)]
        n: u64,
    },
    /// Lower triangular matrix of a partition, or the upper triangular
    /// matrix of a difference sequence with --delta.
    Matrix(MatrixArgs),
    /// Partitions that are a Durfee square times a 1-hook.
    Dh { n: u64 },
    /// Every class of weight n with its three indices and size.
    Classes { n: u64 },
    /// Lightest and heaviest orderings of a difference set.
    Extremes {
        /// Comma separated positive values.
        values: String,
    },
    /// ASCII Ferrers diagram.
    Render {
        partition: Partition,
        /// Largest row at the bottom.
        #[arg(long)]
        cartesian: bool,
        /// Label each central hook with its own letter.
        #[arg(long)]
        hooks: bool,
    },
    /// Run every cross-check up to weight --max-n.
    Verify {
        #[arg(long, default_value_t = 30)]
        max_n: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CountCommand {
    /// p(n).
    N {
        n: u64,
        #[arg(long, value_enum, default_value_t = PnMethod::Hooktypes)]
        method: PnMethod,
    },
    /// Partitions of n with Durfee square of side r.
    Nr {
        n: u64,
        r: usize,
        #[arg(long, value_enum, default_value_t = NrMethod::Sum)]
        method: NrMethod,
    },
    /// Partitions with the given hook type.
    Hooktype { ks: HookType },
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(required_unless_present = "delta", conflicts_with = "delta")]
    pub partition: Option<Partition>,
    #[arg(long)]
    pub delta: Option<DifferenceSequence>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PnMethod {
    Hooktypes,
    Series,
    Hdecomp,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NrMethod {
    Sum,
    Recurrence,
    Series,
    Derivative,
    Closed,
    Oracle,
}

impl PnMethod {
    pub fn name(self) -> &'static str {
        match self {
            PnMethod::Hooktypes => "hooktypes",
            PnMethod::Series => "series",
            PnMethod::Hdecomp => "hdecomp",
            PnMethod::Oracle => "oracle",
        }
    }
}

impl NrMethod {
    pub fn name(self) -> &'static str {
        match self {
            NrMethod::Sum => "sum",
            NrMethod::Recurrence => "recurrence",
            NrMethod::Series => "series",
            NrMethod::Derivative => "derivative",
            NrMethod::Closed => "closed",
            NrMethod::Oracle => "oracle",
        }
    }
}
