#pragma once

#include <string_view>
#include <vector>

// Stored example prompts and model-reply transcripts. These are golden data:
// byte-stable, never re-derived from the templates at runtime. The example
// prompts intentionally differ from the catalog templates in small ways
// (scenario-specific wording); keep them exactly as stored.

namespace ivsearch::fixtures {

struct ExamplePrompt {
    std::string_view id;
    std::string_view template_name;  // catalog entry the example derives from
    std::string_view text;
};

inline const std::vector<ExamplePrompt>& example_prompts() {
    static const std::vector<ExamplePrompt> k = {
        {"P1-1", "P1",
         "you are a high school graduate. you need to make a college attendance decision. what would be factors (factors of schools and factors of yourself) that can determine your decision but that do not directly affect your future earnings, except through college attendance (that is, that affect your earnings only through college attendance)? list forty factors that are quantifiable, twenty for school factors and twenty for factors of yourself. explain the answers."},
        {"P2X-1", "P2X",
         "suppose you are a student with family income $10K per year, who is asian female from california, whose parents have college education, who is catholic. among the forty factors listed above, choose all factors that are not associated with your innate ability and personality and school quality, which determine earnings. create separate lists for school factors and factors of yourself. for each factor chosen, explain your reasoning."},
        {"P1-2-1", "P1",
         "you are a manager at a manufacturing firm. you need to make a decision on how much labor and capital inputs to use to produce outputs. what would be factors (factors of markets and economy and factors of yourself) that can determine your decision but that do not directly affect your output productions, except through the input choices (that is, that affect your firm's outputs only through inputs)? list forty factors that are quantifiable, twenty for market factors and twenty for managerial factors. explain the answers."},
        {"P2X-2-1", "P2X",
         "suppose you are a manager at a firm with specific level of capital intensity and specific scale of operations, which has a specific market share in a specific industry. among the forty factors listed above, choose all factors that are not influenced by productivity shocks of your firm, which determine outputs. create separate lists for market factors and managerial factors. for each factor chosen, explain your reasoning."},
        {"P1-2-2", "P1",
         "you are a dealer at a fish market. you need to set the prices of fish. what would be factors that can determine your decision but that do not directly affect the customers' demand for fish, except through the price you set (that is, that affect the demand only through fish prices). list forty factors that are quantifiable. explain your answer."},
        {"P2-2-2", "P2",
         "suppose you are a dealer at the fish market who is selling fish and setting its prices on a day of the week. among the factors listed above, choose all factors are not influenced by fish market conditions or customers' characteristics that determine demand for fish. for each factor chosen, explain your reasoning."},
        {"P1-3-1", "P1",
         "you are a farmer in a village in rural india. you want to influence your peer farmers in the same village to introduce a new farming technologies that you introduced. what would be factors (factors of farming and village, and factors of yourself) that can determine your influence on peers but that do not directly affect your peers' technology adoption decisions, except through your influence (that is, that affect your peers' decisions only through your influence)? list twenty factors that are quantifiable. explain your answer."},
        {"P2X-3-1", "P2X",
         "suppose you are a 40 year old male farmer of a specific crop in the village in rural india. among the factors listed above, which factors are not influenced by factors (e.g., similar background and preferences) that brought you and your peers in the same neighborhood and social network from the first place? for each factor chosen, explain your reasoning."},
        {"P1-3-2", "P1",
         "you are a teenager in indonasia who smokes. you want to influence your peers in your social media network to smoke. what would be factors (factors of social media, your school and region, and factors of yourself) that can determine your influence on peers but that do not directly affect your peers' smoking decisions, except through your influence (that is, that affect your peers' decisions only through your influence)? list twenty factors that are quantifiable. explain your answer."},
        {"P2X-3-2", "P2X",
         "suppose you are a teenage boy in urban indonesia who goes to high school and is from middle-income family. among the factors listed above, which factors are not influenced by factors (e.g., similar background and preferences) that brought you and your peers in the same social network from the first place? for each factor chosen, explain your reasoning."},
        {"C1-1", "C1",
         "you are the policymaker in the department of labor, deciding whether to increase the minimum wage or not and to which state to introduce this minimum wage law. what factors determine your decision? list forty factors that are quantifiable. explain the answers."},
        {"C2-1", "C2",
         "among the forty factors listed above, choose all factors that directly determine the temporal changes in average wages at fast food restaurants, not only indirectly through the minimum wage law. the chosen factors can still determine your decision of introducing minimum wage law. for each factor chosen, explain your reasoning."},
    };
    return k;
}

// ---------------------------------------------------------------------------
// Reply transcripts. Used as scripted backend output in replay-style tests
// and as parser fixtures.

// Refined instrument list for the college-attendance scenario:
// 5 student-side factors, 9 school-side factors.
inline constexpr std::string_view kCollegeRefineReply =
    R"__(factors of yourself:

1. Distance from Home to College — This is purely geographical and independent of personal attributes.
2. Personal Savings for Education — While this might be influenced by a student's ability to save, it's largely determined by external economic conditions and family support.
3. Number of Siblings Attending College — This depends on family decisions and the educational pursuits of siblings, unrelated to the student's personal capabilities or characteristics.
4. Parents' Educational Background — A demographic factor that precedes the student's own choices and abilities.
5. Religious Affiliations — A personal and family cultural factor, not necessarily a direct influence on personal academic or career potential.

school factors:

6. Campus Crime Rates — Safety measures and local crime statistics are external to the student's attributes.
7. Diversity of Student Body — Reflects the school's admissions policies and demographic outreach, independent of any one student's traits.
8. Library Size (Volumes Held) — A resource factor that's determined by the institution's funding and priorities.
9. Availability of Online Courses — Indicates the institution's commitment to flexible learning options, independent of student characteristics.
10. Campus Facilities Quality (Gyms, Labs, etc.) — Dependent on the school's investment in infrastructure.
11. Campus Housing Capacity — Dictated by the university's accommodations and facilities, not by student traits.
12. Proximity to Urban Centers — Geographic location of the school relative to cities.
13. Environmental Sustainability Rating — Reflects the institution's environmental policies and infrastructure.
14. Technology Integration in Classrooms — Indicates the level of modern technological adoption by the school.)__";

// Broader step-1 list for the same scenario; contains everything in the
// refined reply plus two factors that do not survive refinement.
inline constexpr std::string_view kCollegeSearchReply =
    R"__(factors of yourself:

1. Distance from Home to College — How far the student lives from candidate campuses.
2. Personal Savings for Education — Funds set aside for tuition and living costs.
3. Number of Siblings Attending College — Concurrent enrollment among siblings.
4. Parents' Educational Background — Highest degrees completed by parents.
5. Religious Affiliations — Family religious membership and practice.
6. Family Relocation Plans — Whether the household expects to move soon.

school factors:

7. Campus Crime Rates — Reported incidents per thousand students.
8. Diversity of Student Body — Demographic composition of enrolled students.
9. Library Size (Volumes Held) — Collection size of the main library.
10. Availability of Online Courses — Share of the catalog offered online.
11. Campus Facilities Quality (Gyms, Labs, etc.) — Condition and breadth of facilities.
12. Campus Housing Capacity — Beds available in university housing.
13. Proximity to Urban Centers — Distance from campus to the nearest city.
14. Environmental Sustainability Rating — Third-party sustainability score.
15. Technology Integration in Classrooms — Classroom technology coverage.
16. Average Class Size — Mean enrolled students per course section.)__";

// Supply-side instrument list for the production-function scenario. The
// managerial panel's numbering restarts at 10, as transcribed.
inline constexpr std::string_view kProductionRefineReply =
    R"__(market factors:

1. Interest Rates — Influence the cost of borrowing, affecting decisions on how much capital to acquire or lease for production without altering current productivity levels.
2. Exchange Rates — Affect the price of imported inputs, which can change input costs and investment decisions in foreign capital, again without directly impacting the productivity of existing inputs.
3. Tariffs and Trade Policies — Alter the cost structures for imported and exported goods, impacting decisions on where to source inputs or sell outputs, but do not affect the productivity of the inputs themselves.
4. Regulatory Changes — Can necessitate changes in production processes or input materials, which may affect costs and sourcing decisions without directly impacting the productivity of the inputs once deployed.
5. Transportation Costs — Affect the total cost of inputs and can influence decisions regarding sourcing and logistics. These costs don't directly alter how effectively inputs are converted into outputs.
6. Real Estate Prices — Influence decisions about expanding or relocating production facilities, affecting capital expenditure and operational scale without altering current production efficiency.
7. Environmental Regulations — Stricter environmental regulations may force a firm to switch to greener, possibly more expensive inputs or production technologies, affecting input choices and costs but not directly modifying the productivity of any specific input set.
8. Patents and Intellectual Property Rights — Governed by legal systems and not directly influenced by a firm's internal productivity shocks.
9. Political Stability — Affect market predictability and investment decisions, impacting where and how much to invest in capital and labor, without changing how these inputs produce once acquired.
10. Global Economic Conditions — Influence market opportunities and risks associated with foreign investments, guiding input acquisition strategies without changing input productivity.

managerial factors:

10. Capital Availability — Determines its ability to invest in both labor and capital inputs, shaping the scale of operations and types of technology employed, without directly changing how productive these inputs are
11. Company's Risk Tolerance — Can decide the extent to which a firm is willing to invest in new, potentially more efficient, but riskier technologies or markets, affecting input decisions rather than the productivity of current inputs
12. Strategic Objectives — Long-term strategic objectives may dictate prioritizing certain types of inputs or production scales, influencing the firm's approach to markets and technology investments without affecting current input productivity.
13. Financial Health of the Company — The overall financial stability can limit or expand the firm's ability to procure and utilize inputs optimally, shaping how inputs are managed and financed rather than directly influencing their productivity
14. Compliance and Legal Considerations: Driven by external legal requirements and internal ethics, not by short-term productivity
15. Corporate Social Responsibility (CSR) Initiatives — Strategic decisions about CSR are influenced by long-term planning and brand image considerations.)__";

// Refined supply-side list for the fish-market scenario.
inline constexpr std::string_view kDemandRefineReply =
    R"__(1. Fuel Costs — Costs for fuel typically depend on broader economic factors such as oil prices and are not directly affected by market demand for fish or specific customer characteristics.
2. Fishing Equipment Depreciation — The depreciation of fishing gear like nets and boats is largely a function of use and time, rather than market conditions or customer demand.
3. Weather Conditions — Weather affects fishing operations directly but is not influenced by market conditions or the specific characteristics of customers.
4. Regulatory Costs — Costs associated with licensing and compliance with fishing regulations are dictated by regulatory bodies and do not fluctuate based on customer demand or market conditions.
5. Interest Rates — The rates charged on loans for purchasing boats or equipment are determined by financial markets and policy, rather than direct market conditions of the fish market or customer demands.
6. Insurance Costs — Premiums for insuring fishing equipment and operations are typically based on risk assessments and sector-wide data, rather than being directly influenced by day-to-day market conditions or characteristics of customers.
7. Utility Costs at Sales Points — The cost of utilities like electricity and water at sales points tends to be fixed or based on usage rates that are independent of market demand specifics.
8. Economic Conditions — Broader economic factors that affect overall spending and investment patterns influence operational costs but are not dictated by the fish market conditions or customer preferences.
9. Technological Advances — Investments in technology to improve fishing or sales operations are usually planned based on long-term business strategy and efficiency gains rather than immediate market conditions or specific customer demographics.
10. Government Subsidies — Subsidies to the fishing industry are determined by government policies, which are independent of daily market conditions or customer demands in the fish market.
11. Tariffs on Imports — Tariffs imposed on imported fish are a matter of international trade policy and do not change based on daily fluctuations in market demand or customers characteristics.
12. Employee Training Costs — Costs of training employees in handling and selling fish relate to operational efficiency, which are not directly influenced by the day's market conditions or customer demands.)__";

// Step-1 list for the fish-market scenario: the refined set plus labor costs,
// which the refinement step leaves out.
inline constexpr std::string_view kDemandSearchReply =
    R"__(1. Fuel Costs — Price of fuel for boats and transport.
2. Fishing Equipment Depreciation — Wear on nets, boats and gear.
3. Weather Conditions — Sea and coastal weather on fishing days.
4. Labor Costs — Wages paid to crew and market staff.
5. Regulatory Costs — Licensing and compliance fees.
6. Interest Rates — Cost of financing boats and equipment.
7. Insurance Costs — Premiums on vessels and stock.
8. Utility Costs at Sales Points — Electricity and water at the stall.
9. Economic Conditions — General macroeconomic climate.
10. Technological Advances — New equipment for catching and selling.
11. Government Subsidies — Support payments to the fishing industry.
12. Tariffs on Imports — Duties charged on imported fish.
13. Employee Training Costs — Cost of training staff.)__";

// The refinement step's stated reason for leaving labor costs out.
inline constexpr std::string_view kLaborCostsExplanation =
    "labor costs are somewhat flexible and can be adjusted in response to changes in market "
    "conditions and customer demand, making them more dynamic than some of the other factors "
    "listed.";

// Peer-influence instruments for the farming technology-adoption scenario.
inline constexpr std::string_view kPeerAdoptionRefineReply =
    R"__(1. Number of Training Sessions Attended — This reflects an individual's initiative to seek additional education and may vary widely among farmers with similar backgrounds due to personal choices, availability of time, or perception of the value of formal education
2. Number of Demonstrations Conducted — This is influenced by an individual's willingness to share knowledge and the resources they are willing or able to allocate for such activities, which might not be uniformly distributed even among neighbors
3. Increase in Yield After Technology Adoption — This factor depends significantly on how effectively an individual implements and adapts new technologies to their specific farming practices, which can differ greatly even among farmers growing the same crops
4. Access to Credit — Individual financial management skills, credit history, and relationships with lending institutions can influence this factor, which isn't necessarily shared among all peers in a community
5. Participation in Local Decision Making Bodies — Involvement in local governance or committees often depends on personal ambition, political skills, and community perception of an individual's leadership qualities, which can vary independently of shared initial factors
6. Awards or Recognitions Received — Achieving recognition for farming practices or community service is heavily dependent on individual effort and excellence and is not uniformly influenced by community-shared characteristics
7. Communications Skills Assessment — Communication effectiveness can be developed through personal experience, education, and innate ability, which vary among individuals regardless of their initial common background
8. Number of Articles or Case Studies Published — This is influenced by an individual's ability to write, research, and engage with broader audiences, skills that are not common to all individuals in a network
9. Engagement in Social Media or Technology Platforms — The level of engagement in modern communication and technology platforms depends on personal interest in technology, availability of resources, and individual attitudes toward innovation
10. Success Stories Documented and Shared — The ability and willingness to document and share success stories can be a personal choice influenced by an individual's perspective on self-promotion and communication)__";

// Controls for the minimum-wage scenario: all eleven controls, in the order
// reported (trend-only controls first).
inline constexpr std::string_view kMinWageControlsReply =
    R"__(1. Inflation Rates — Higher inflation can decrease the real income of workers if wages don't adjust accordingly, making a case for introducing a minimum wage to maintain purchasing power.
2. Consumer Price Index (CPI) — A rising CPI without wage increases can reduce workers' real earnings, suggesting a minimum wage could help offset cost of living increases.
3. Job Vacancy Rates — Low vacancies could keep wages down due to ample labor supply; high rates may drive wages up, affecting the urgency and approach to minimum wage legislation.
4. Labor Productivity Growth — This affects temporary wage increases linked to efficiency improvements. Productivity gains can lead to bonus payments or higher wages temporarily but don't define starting wage rates.
5. Employment Growth Rates — Robust job growth in the sector might show the industry can support higher wages, while slow growth suggests caution in wage hikes.
6. Labor Force Participation Rate — High participation may suppress wages due to increased labor supply, supporting the need for a minimum wage to ensure fair earnings.
7. Union Membership Rates — Low unionization in fast food often means weaker wage bargaining, possibly justifying minimum wage laws to improve wage standards.
8. Turnover Rates — High turnover might indicate wage dissatisfaction, pointing to the need for a minimum wage to stabilize the workforce.
9. Corporate Profit Trends — If profits are high but wages are stagnant, it could suggest that the industry can afford to pay more, bolstering the argument for a minimum wage.
10. Economic Diversity Score — Dependency on low-wage sectors like fast food in less economically diverse areas might necessitate a minimum wage to ensure living standards.
11. Percentage of Workforce in Gig Economy — Increased gig work could pressure fast food employers to offer competitive wages, influencing when and how to implement minimum wage laws.)__";

// Same scenario, split by which prompt produced the rows: the level-outcome
// refinement yields rows 5-11; the trend-emphasis follow-up yields rows 1-4.
inline constexpr std::string_view kMinWageLevelControlsReply =
    R"__(1. Employment Growth Rates — Robust job growth in the sector might show the industry can support higher wages, while slow growth suggests caution in wage hikes.
2. Labor Force Participation Rate — High participation may suppress wages due to increased labor supply, supporting the need for a minimum wage to ensure fair earnings.
3. Union Membership Rates — Low unionization in fast food often means weaker wage bargaining, possibly justifying minimum wage laws to improve wage standards.
4. Turnover Rates — High turnover might indicate wage dissatisfaction, pointing to the need for a minimum wage to stabilize the workforce.
5. Corporate Profit Trends — If profits are high but wages are stagnant, it could suggest that the industry can afford to pay more, bolstering the argument for a minimum wage.
6. Economic Diversity Score — Dependency on low-wage sectors like fast food in less economically diverse areas might necessitate a minimum wage to ensure living standards.
7. Percentage of Workforce in Gig Economy — Increased gig work could pressure fast food employers to offer competitive wages, influencing when and how to implement minimum wage laws.)__";

inline constexpr std::string_view kMinWageTrendOnlyReply =
    R"__(1. Inflation Rates — Higher inflation can decrease the real income of workers if wages don't adjust accordingly, making a case for introducing a minimum wage to maintain purchasing power.
2. Consumer Price Index (CPI) — A rising CPI without wage increases can reduce workers' real earnings, suggesting a minimum wage could help offset cost of living increases.
3. Job Vacancy Rates — Low vacancies could keep wages down due to ample labor supply; high rates may drive wages up, affecting the urgency and approach to minimum wage legislation.
4. Labor Productivity Growth — This affects temporary wage increases linked to efficiency improvements. Productivity gains can lead to bonus payments or higher wages temporarily but don't define starting wage rates.)__";

// Step-1 decision factors for the minimum-wage scenario: everything that
// later survives, plus a few that do not.
inline constexpr std::string_view kMinWageSearchReply =
    R"__(1. Inflation Rates — Erosion of purchasing power over time.
2. Consumer Price Index (CPI) — Cost-of-living movements.
3. Job Vacancy Rates — Openings posted relative to employment.
4. Labor Productivity Growth — Output per hour trends.
5. Employment Growth Rates — Sector job growth.
6. Labor Force Participation Rate — Share of adults working or seeking work.
7. Union Membership Rates — Collective bargaining coverage.
8. Turnover Rates — Quits and separations in the sector.
9. Corporate Profit Trends — Industry profitability.
10. Economic Diversity Score — Sector concentration of the local economy.
11. Percentage of Workforce in Gig Economy — Alternative work arrangements.
12. State Budget Balance — Fiscal room for enforcement programs.
13. Median Household Income — Overall income level in the state.)__";

// Running-variable replies. Cutoff sources and values appear inside an
// "(e.g., ...)" group, as reported per scenario.

inline constexpr std::string_view kMedicaidCriteriaReply =
    R"__(1. Age — Eligibility groups are defined by age bands.
2. Federal Poverty Level (FPL) — Household income measured against the federal poverty guidelines.
3. Household Size — Number of members counted for income rules.)__";

inline constexpr std::string_view kMedicaidCutoffReply =
    R"__(1. Age
2. Federal Poverty Level (FPL) (e.g., Washington D.C.: below 215% and below 221% (family of 3); equiv. annual incomes below $31,347 and $54,940, reps.)
3. Household Size (e.g., Modified Adjusted Gross Income (MAGI) rules: expressed as % of FPL, adjusted by 5% FPL disregard))__";

inline constexpr std::string_view kPellCriteriaReply =
    R"__(1. SAT scores — Standardized admission test results.
2. GPA — High school grade point average.
3. Expected family contribution (EFC) — Federal aid formula output.)__";

inline constexpr std::string_view kPellCutoffReply =
    R"__(1. SAT scores
2. GPA
3. Expected family contribution (EFC) (e.g., the Pell Grant 2023-2024: below $6,656))__";

inline constexpr std::string_view kSchoolAidCutoffReply =
    R"__(1. Relative average property values
2. Percentage of low-income students (e.g., Equity Multiplier 2023-2024, above 70%)
3. Mobility rate (e.g., Equity Multiplier, above 25%)
4. Age (e.g., Transitional Kindergarten (TK) expansion 2023-24, 15th b-day by April 2)
5. Local Control Funding Formula (LCFF) (California))__";

inline constexpr std::string_view kItalyTrainingCutoffReply =
    R"__(1. Age (e.g., below 35; source: National Policies Platform)
2. Income: (e.g., below 60%; source: National Policies Platform)
3. Salary (e.g., EU Blue Card: above 3/2 of average Italian salary; source: ETIAS Italy))__";

inline constexpr std::string_view kUkReemploymentCutoffReply =
    R"__(1. Age at end of unemployment spell
2. Age (e.g., Jobseeker's Allowance (JSA): above 18, with exceptions for some 16 or 17; source: UK Rules)
3. Minimum Salary (e.g., Skilled Worker visa: above £38,700 or going rate for job type, whichever is higher; source: GOV.UK)
4. Residency Duration (e.g., JSA: above 3 months prior to claim, for new or returning UK nationals; source: UK Rules))__";

// What the probe question returned after the role-played procedure.
inline constexpr std::string_view kProbeReply =
    "i didn't have specific sources for the previous responses. they were based on general "
    "reasoning about the scenario rather than particular references.";

}  // namespace ivsearch::fixtures
