#pragma once

namespace lveval::templates {

// Versioned instruction templates sent to model providers. The version tag of
// a template is folded into the request digest, so editing a template
// invalidates exactly the cache entries it affects.

struct Template {
  const char* version;
  const char* text;
};

// --- prompt complexity scoring ({prompt_text}) ------------------------------
inline constexpr Template complexity_scoring{
    "complexity-v1",
    R"(You are an expert evaluator of prompts used for image or video generation.
Your task is to analyze the complexity of a given prompt in detail.
Return the output strictly as a JSON object in the following nested dictionary structure:
{
    "semantic_complexity": {
        "score": <integer 1-10>,
        "explanation": "<short explanation>"
    },
    "structural_complexity": {
        "score": <integer 1-10>,
        "explanation": "<short explanation>"
    },
    "control_complexity": {
        "score": <integer 1-10>,
        "explanation": "<short explanation>"
    }
}

### Evaluation criteria ###

1. Semantic complexity:
   - Number of entities (subjects, objects, characters).
   - Number of attributes or modifiers.
   - Abstract or metaphorical concepts.
   - Relationships or interactions between entities.

2. Structural complexity:
   - Prompt length and density.
   - Nested or hierarchical descriptions.
   - Logical relations (conditions, causality, comparisons).
   - Scene richness (multiple settings or sub-elements).

3. Control complexity:
   - Artistic or stylistic constraints (anime, cyberpunk, Van Gogh, etc.).
   - Technical constraints (camera angle, lens type, lighting).
   - Temporal dynamics (video actions, transitions).
   - Consistency requirements (identity or object continuity).
   - Explicit numeric or technical parameters.

### Few-shot examples ###

**Example 1 (simple prompt):**
[Example 1]

**Example 2 (moderately complex prompt):**
[Example 2]

**Example 3 (highly complex prompt):**
[Example 3]

### Now evaluate the following prompt:
{prompt_text})"};

// --- whole-video description (video attached as model input) ----------------
inline constexpr Template video_description{
    "describe-v1",
    R"(## System ##
You are a highly capable visual understanding assistant, skilled in analyzing and summarizing video content with precision and clarity.

## Task ##
Your goal is to produce a coherent and clear paragraph that accurately summarizes the content of a given video.

Please follow these steps internally (do not output intermediate results):

1. **Event Detection**: Identify all major events in the video and arrange them in chronological order.
2. **Visual Element Analysis**: For each event, identify and deeply analyze the key visual components by specifying their attributes and visual characteristics:
   - Subjects: Identify each subject (e.g., person, animal, object) and describe their appearance (e.g., clothing, facial expression, posture, size, color, design).
   - Environments: Describe the setting in detail, including lighting conditions, spatial layout, textures, atmosphere, and any notable background elements.
   - Actions: Detail the actions with clarity-specify how movements are performed (e.g., slow vs. rapid, smooth vs. abrupt), gestures, and interaction between subjects or with objects.
   - Camera Dynamics: Describe how the camera behaves visually-note the type, speed, and purpose of camera movements (e.g., a slow pan to build suspense, a sudden zoom to highlight surprise), including angle perspectives and focal changes.
3. **Event Description**: Describe each event accurately, incorporating the visual elements identified.
4. **Summary Composition**: Integrate all event descriptions into a single, well-structured paragraph that captures the full sequence and essence of the video.

## Output Format ##
Only output the final summary paragraph. Do not include any intermediate steps, bullet points, or reasoning process.)"};

// --- event extraction from a description ({description_text}) ---------------
inline constexpr Template event_extraction{
    "events-v1",
    R"(You are an event extraction assistant. You will be given a textual description of a video. Your task is to extract all the key events from the description in the order they occur.

Each event should be represented as a JSON object with the following five fields:

- "event": A natural-language description of the event as a whole. Ensure the descriptions are contextually coherent with each other and reflect a consistent narrative flow across the video.
- "subject": Who or what is involved in the event. If there is no clear visual subject (e.g., a landscape or object), use an empty string "" as default
- "setting": Where the event takes place
- "action": What happens during the event
- "camera motion": How the camera moves or is positioned (e.g., static, panning, zoom-in, tracking). If not explicitly stated, infer it or use "static"

Make sure the events together form a continuous and coherent sequence, as if telling a consistent visual story from beginning to end. Avoid treating them as isolated incidents.

When describing each event, feel free to refer back to earlier subjects or settings if the video appears to maintain continuity.

Please only output a **JSON array** of all events in the order they occur as response, and do not include any irrelevant information:

```json
[
  {
    "event": "...",
    "subject": "...",
    "setting": "...",
    "action": "...",
    "camera motion": "..."
  },
  ...
]
```

Here is the video description:
{description_text})"};

// --- human action extraction ({prompt_text}) --------------------------------
inline constexpr Template human_action_extraction{
    "actions-v1",
    R"(You are an assistant that analyzes video generation prompts.
Your task is to detect whether the prompt contains any *human action* (a human subject performing a specific action).

## Output format ##

* Always output a list.
* Each element in the list is a JSON object with two fields:
  * `"subject"`: the human subject
  * `"action"`: the action performed
* If no human action is detected, return `[]`.

## Examples ##

**Example 1**
[Example 1]

**Example 2**
[Example 2]

**Example 3**
[Example 3]

Now, analyze the following prompt:
{prompt_text})"};

// --- action occurrence yes/no check ({question_text}) -----------------------
inline constexpr Template action_occurrence_qa{
    "action-occ-v1",
    R"(You are an action verification assistant. Your task is to answer questions about whether a specific action happens in a video. You must always respond strictly with "Yes" or "No". Do not provide any explanation, reasoning, or additional words. If you are unsure, answer "No".

Here are some examples as output format reference:

**Example 1**
Question: Did the man run in the video?
Answer: Yes

**Example 2**
Question: Did the woman jump in the video?
Answer: No

**Example 3**
Question: Does the dog chase a ball in the video?
Answer: Yes

Now analyze the given video:

Question: {question_text}
Answer: )"};

// --- action smoothness yes/no check ({action_text}, {question_text}) --------
inline constexpr Template action_smoothness_qa{
    "action-smooth-v1",
    R"(You are an action smoothness evaluation assistant. Your task is to answer binary questions about how smoothly an action is performed in a video. You must always respond strictly with "Yes" or "No". Do not provide any explanation, reasoning, or additional words. If you are unsure, answer "No".
Now here is the action and question.
Action: {action_text}
Question: {question_text})"};

// The three preset smoothness checks asked per action.
inline constexpr const char* action_smoothness_questions[3] = {
    "Was the action continuous without abrupt interruptions?",
    "Did the action appear natural and not stiff?",
    "Did the action maintain fluid transitions from start to finish?",
};

// --- content clarity judging (video attached) --------------------------------
inline constexpr Template content_clarity_judge{
    "clarity-v1",
    R"(You are a **vision-language evaluator**. Your task is to **watch the input video** and evaluate how well it communicates a coherent and meaningful narrative.

Evaluate across **four dimensions** (score **0-4**):

* **0 = Very Poor**
* **1 = Poor**
* **2 = Acceptable**
* **3 = Good**
* **4 = Excellent**

For each dimension, output a JSON object with:

* `"score"`: the numeric score
* `"reason"`: 1-2 sentences citing what is visible in the video that justifies the score

**Dimensions:**

1. **Theme Clarity** - Is there a clear central theme or message?
2. **Logical Structure** - Do scenes flow coherently?
3. **Information Completeness** - Is enough visual context provided to understand the video?
4. **Information Consistency** - Are visual elements consistent across shots?

Use the following examples only as **format references**. Do **not** align your scoring with them.

---

### Example 1 (low range)
[Example 1]

### Example 2 (mid range)
[Example 2]

### Example 3 (high range)
[Example 3])"};

// --- per-dimension viewing-feedback extraction ({evaluation_text}) ----------
inline constexpr Template herd_evaluation_extraction{
    "herd-extract-v1",
    R"(Please extract some key information from text about someone's feeling after watch a video and merge these key information into a json format data. I'll give you an example as format reference. You should consider from the following aspects:

1. Emotional Response: Describe how the video made you feel curious, tense, inspired, confused, etc.
2. Narrative Flow: Analyze how the story unfolds and whether the pacing feels smooth or rushed.
3. Character Development: Evaluate how well the characters are developed and how their relationships evolve.
4. Visual Style: Comment on the use of visuals, color and cinematography to create atmosphere.
5. Themes: Reflect on the core ideas or social commentary presented in the video.
6. Interpretive Depth: Consider whether the video leaves room for multiple interpretations or unanswered questions.
7. Overall Impression: Give your overall impression and suggest whether it's worth watching, and for whom.

If any of them is not mentioned in the input paragraph, you could remain the default value in the given template.

## Input Text ##
{evaluation_text}
## Ouput Format Reference ##
```json
{
    "Emotional Response": "",
    "Narrative Flow": "",
    "Character Development": "",
    "Visual Style": "",
    "Themes": "",
    "Interpretive Depth": "",
    "Overall Impression": ""
}
```)"};

// --- closed-ended question generation ({evaluation_text}) -------------------
inline constexpr Template herd_question_generation{
    "herd-questions-v1",
    R"(Given a multi-dimensional evaluation of a video, generate one closed-ended question (answerable with only "yes" or "no") for each dimension.

Each question should:
* Accurately reflect the key message or implication of the original description.
* Use clear and natural phrasing.
* Remain faithful to the tone and nuance of the source content (e.g., themes, pacing, emotion).
* Be specific enough to elicit a meaningful "yes" or "no" answer.

## Input Format ##
A JSON object, where each key is a dimension and each value is its evaluation.

## Output Format ##
A JSON object where each key is the same dimension, and each value is a yes/no question derived from the evaluation. Demonstrated as follows:
```json
{
    "Emotional Response": "",
    "Narrative Flow": "",
    "Character Development": "",
    "Visual Style": "",
    "Themes": "",
    "Interpretive Depth": "",
    "Overall Impression": ""
}
```

## Explanation of Each Dimension ##
1. Emotional Response: Describe how the video made you feel curious, tense, inspired, confused, etc.
2. Narrative Flow: Analyze how the story unfolds and whether the pacing feels smooth or rushed.
3. Character Development: Evaluate how well the characters are developed and how their relationships evolve.
4. Visual Style: Comment on the use of visuals, color and cinematography to create atmosphere.
5. Themes: Reflect on the core ideas or social commentary presented in the video.
6. Interpretive Depth: Consider whether the video leaves room for multiple interpretations or unanswered questions.
7. Overall Impression: Give your overall impression and suggest whether it's worth watching, and for whom.

## Input ##
```json
{evaluation_text}
```

## Ouput ##)"};

// --- question polarity classification ({question_text}) ---------------------
inline constexpr Template herd_polarity{
    "herd-polarity-v1",
    R"(You are given a list of evaluative questions about a video.
Each question is designed to check whether the video meets or fails human expectations in different aspects.
Your task is to classify each question as **positive** or **negative**, based on the following principle:

- If the question asks whether the video achieved or matched an intended/expected effect, then the question is **positive**.
  (In this case, a "Yes" answer indicates the video met expectations.)

- If the question asks whether the video failed to achieve or lacked something that is expected, then the question is **negative**.
  (In this case, a "Yes" answer indicates the video did not meet expectations.)

Output only "positive" or "negative" for each question.

Question: {question_text}
Answer: )"};

// --- expectation-check VQA ({question_text}) --------------------------------
inline constexpr Template herd_vqa{
    "herd-vqa-v1",
    R"(You are a video question answering assistant. Watch the given video and answer the question about it. You must respond with exactly one word: "yes", "no", or "unclear". Answer "unclear" only when the video truly does not allow a judgment.

Here are some examples as output format reference:

**Example 1**
Question: Did the video establish a calm and reflective mood?
Answer: yes

**Example 2**
Question: Did the story feel rushed and hard to follow?
Answer: no

**Example 3**
Question: Did the relationships between the characters evolve over time?
Answer: unclear

Now analyze the given video:

Question: {question_text}
Answer: )"};

// --- per-event sub-prompt generation ({prompt_text}, {events_json}) ---------
inline constexpr Template event_prompt_split{
    "event-split-v1",
    R"(You are a prompt writing assistant for multi-prompt video generation. Given an original video description and the ordered list of key events extracted from it, write one self-contained generation prompt per event.

Each sub-prompt should:
* Cover exactly one event, in the given order.
* Name the event's subject and setting so the clip can stand alone.
* Stay faithful to the original description without inventing new content.

## Output Format ##
Only output a JSON array of strings, one per event, in order. Do not include any other text.

## Original Prompt ##
{prompt_text}

## Extracted Events ##
{events_json})"};

}  // namespace lveval::templates
