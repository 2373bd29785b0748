"""Tiny local checkpoints standing in for hub models in offline tests."""

import pytest
import torch
from tokenizers import Tokenizer, models, pre_tokenizers, trainers
from tokenizers.processors import TemplateProcessing
from transformers import (
    BertConfig,
    BertModel,
    CLIPConfig,
    CLIPModel,
    LlamaConfig,
    LlamaForCausalLM,
    PreTrainedTokenizerFast,
)

from alm_exporter.canonical import canonical_sentences


def word_level_tokenizer(specials):
    tok = Tokenizer(models.WordLevel(unk_token="[UNK]"))
    tok.pre_tokenizer = pre_tokenizers.Whitespace()
    trainer = trainers.WordLevelTrainer(special_tokens=specials)
    tok.train_from_iterator(canonical_sentences(), trainer)
    return tok


@pytest.fixture(scope="session")
def tiny_decoder_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("tiny-llama")
    tok = word_level_tokenizer(["[UNK]", "[PAD]", "<s>", "</s>"])
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tok, unk_token="[UNK]", pad_token="[PAD]",
        bos_token="<s>", eos_token="</s>")
    fast.save_pretrained(out)
    torch.manual_seed(0)
    config = LlamaConfig(
        vocab_size=fast.vocab_size, hidden_size=32, intermediate_size=64,
        num_hidden_layers=2, num_attention_heads=4, num_key_value_heads=4,
        max_position_embeddings=64,
        pad_token_id=fast.pad_token_id, bos_token_id=fast.bos_token_id,
        eos_token_id=fast.eos_token_id)
    LlamaForCausalLM(config).save_pretrained(out)
    return out


@pytest.fixture(scope="session")
def tiny_encoder_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("tiny-bert")
    tok = word_level_tokenizer(["[UNK]", "[PAD]", "[CLS]", "[SEP]"])
    tok.post_processor = TemplateProcessing(
        single="[CLS] $A [SEP]",
        special_tokens=[("[CLS]", tok.token_to_id("[CLS]")),
                        ("[SEP]", tok.token_to_id("[SEP]"))])
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tok, unk_token="[UNK]", pad_token="[PAD]",
        cls_token="[CLS]", sep_token="[SEP]")
    fast.save_pretrained(out)
    torch.manual_seed(1)
    config = BertConfig(
        vocab_size=fast.vocab_size, hidden_size=32, intermediate_size=64,
        num_hidden_layers=2, num_attention_heads=4,
        max_position_embeddings=64, pad_token_id=fast.pad_token_id)
    BertModel(config).save_pretrained(out)
    return out


@pytest.fixture(scope="session")
def tiny_clip_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("tiny-clip")
    tok = word_level_tokenizer(["[UNK]", "[PAD]", "<|startoftext|>",
                                "<|endoftext|>"])
    tok.post_processor = TemplateProcessing(
        single="<|startoftext|> $A <|endoftext|>",
        special_tokens=[
            ("<|startoftext|>", tok.token_to_id("<|startoftext|>")),
            ("<|endoftext|>", tok.token_to_id("<|endoftext|>"))])
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tok, unk_token="[UNK]", pad_token="[PAD]",
        bos_token="<|startoftext|>", eos_token="<|endoftext|>")
    fast.save_pretrained(out)
    torch.manual_seed(2)
    config = CLIPConfig(
        text_config={
            "vocab_size": fast.vocab_size, "hidden_size": 32,
            "intermediate_size": 64, "num_hidden_layers": 2,
            "num_attention_heads": 4, "max_position_embeddings": 64,
            "bos_token_id": fast.bos_token_id,
            "eos_token_id": fast.eos_token_id,
            "pad_token_id": fast.pad_token_id,
        },
        vision_config={
            "hidden_size": 32, "intermediate_size": 64,
            "num_hidden_layers": 2, "num_attention_heads": 4,
            "image_size": 32, "patch_size": 16,
        },
        projection_dim=24)
    CLIPModel(config).save_pretrained(out)
    return out
