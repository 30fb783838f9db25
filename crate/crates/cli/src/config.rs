use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use permlab::permideal::FamilySpec;
use permlab::{Field, MonomialOrder, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Singular,
    Macaulay2,
}

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct CliConfig {
    pub n: usize,
    pub field: Field,
    pub order: MonomialOrder,
    pub out: Option<OutputFormat>,
    pub cache_dir: PathBuf,
    pub seed: u64,
    pub budget_seconds: Option<u64>,
    pub exhaustive: bool,
    pub paranoid: bool,
}

impl CliConfig {
    pub fn new(args: &crate::GlobalArgs) -> Result<Self> {
        if args.n < 2 {
            bail!("--n must be at least 2, got {}", args.n);
        }
        let field: Field = args.field.parse().context("bad --field")?;
        let order = MonomialOrder::parse(&args.order, args.n).context("bad --order")?;
        if args.budget_seconds == Some(0) {
            bail!("--budget-seconds must be positive");
        }
        let cache_dir = args
            .cache_dir
            .clone()
            .unwrap_or_else(|| std::env::temp_dir().join("permlab-cache"));
        Ok(CliConfig {
            n: args.n,
            field,
            order,
            out: args.out,
            cache_dir,
            seed: args.seed,
            budget_seconds: args.budget_seconds,
            exhaustive: args.exhaustive,
            paranoid: args.paranoid,
        })
    }

    /// The family parameters. Characteristic 2 is allowed here so that
    /// families can be generated and compared over F2.
    pub fn spec(&self) -> Result<FamilySpec> {
        let spec = if self.field.characteristic() == 2 {
            FamilySpec::char2(self.n, self.field)?
        } else {
            FamilySpec::new(self.n, self.field)?
        };
        Ok(spec)
    }

    /// The ring under the configured order.
    pub fn ring(&self) -> Result<Arc<Ring>> {
        Ok(Ring::new(self.field, self.order.clone())?)
    }

    pub fn format(&self, default: OutputFormat) -> OutputFormat {
        self.out.unwrap_or(default)
    }
}
